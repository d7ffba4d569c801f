from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "rainbowdom._core",
    sources=[
        "python/module.cpp",
        "src/graph.cpp",
        "src/graph_io.cpp",
        "src/rdf.cpp",
        "src/constructions.cpp",
        "src/bounds.cpp",
        "src/solver_bb.cpp",
        "src/solver_dp.cpp",
        "src/solver.cpp",
        "src/audit.cpp",
    ],
    include_dirs=["include", "vendor", "src"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})

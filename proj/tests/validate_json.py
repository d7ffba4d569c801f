#!/usr/bin/env python3
"""Validate JSON on stdin against the schema file given as argv[1]."""

import json
import sys

import jsonschema

with open(sys.argv[1]) as fh:
    schema = json.load(fh)
jsonschema.validate(json.load(sys.stdin), schema)
print("valid")

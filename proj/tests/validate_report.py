#!/usr/bin/env python3
# Copyright 2026 The entlab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""validate_report.py SCHEMA REPORT..."""

import json
import sys

import jsonschema


def main():
    schema = json.load(open(sys.argv[1]))
    for path in sys.argv[2:]:
        jsonschema.validate(json.load(open(path)), schema)
        print("valid:", path)


if __name__ == "__main__":
    main()

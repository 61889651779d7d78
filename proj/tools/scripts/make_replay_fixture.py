#!/usr/bin/env python3
# Copyright 2026 The oclpath Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Builds a replay fixture from prompt dumps and canned answers.

Each --pair names a prompt dump (output of `oclpath prompt`) and an answers
file with lines {"spec_id", "rank", "text"}. Every answer must match a prompt.
"""

import argparse
import hashlib
import json
import math
import sys


def read_jsonl(path):
    with open(path, encoding="utf-8") as f:
        return [json.loads(line) for line in f if line.strip()]


def prompt_key(system, user):
    return hashlib.sha256((system + "\0" + user).encode("utf-8")).hexdigest()


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pair", nargs=2, action="append", metavar=("PROMPTS", "ANSWERS"), required=True)
    ap.add_argument("--out", required=True)
    args = ap.parse_args()

    fixture = {}
    for prompts_path, answers_path in args.pair:
        prompts = {(p["spec_id"], p["rank"]): p for p in read_jsonl(prompts_path)}
        for a in read_jsonl(answers_path):
            p = prompts.get((a["spec_id"], a["rank"]))
            if p is None:
                sys.exit(f"{answers_path}: no prompt for {a['spec_id']} rank {a['rank']}")
            fixture[prompt_key(p["system"], p["user"])] = {
                "text": a["text"],
                "input_tokens": p["approx_tokens"],
                "output_tokens": math.ceil(len(a["text"]) / 4),
            }

    with open(args.out, "w", encoding="utf-8") as f:
        json.dump(dict(sorted(fixture.items())), f, indent=2, ensure_ascii=False)
        f.write("\n")
    print(f"wrote {len(fixture)} entries to {args.out}")


if __name__ == "__main__":
    main()

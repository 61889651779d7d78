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
"""Writes the synthetic ten-spec dataset over the airport model.

Spec i first produces a valid constraint at FIRST_VALID[i] (None: never), and
every later rank stays valid. CORRECT_AT marks the one rank judged correct;
every other valid constraint is judged incorrect.

Expected percentages, k = 1/3/5/10:
  validity     20 / 50 / 60 / 70
  correctness  10 / 20 / 30 / 40
"""

import json
import os
import sys

FIRST_VALID = [1, 1, 2, 3, 3, 5, 8, None, None, None]
CORRECT_AT = {0: 1, 3: 3, 5: 5, 6: 8}
RANKS = 10

SPECS = [
    "Every flight must have a positive duration.",
    "The departure time of a flight is before its arrival time.",
    "The age of a person must not be negative.",
    "A flight carries no more passengers than its maximum number of passengers.",
    "Every flight operated by an airline has a positive duration.",
    "No flight departs from and arrives at the same airport.",
    "The chief executive of an airline is at least 18 years old.",
    "Every airport has a name.",
    "Every passenger of a flight has a name.",
    "An airline operates at least one flight.",
]

VALID = [
    "context Flight inv: self.duration > 0",
    "context Flight inv: self.departTime < self.arrivalTime",
    "context Person inv: self.age >= 0",
    "context Flight inv: self.passengers->size() <= self.maxNrPassengers",
    "context Airline inv: self.flights->forAll(f | f.duration > 0)",
    "context Airport inv: self.departingFlights->excludesAll(self.arrivingFlights)",
    "context Airline inv: self.ceo.age >= 18",
]

INVALID = [
    "context Flight inv: self.pilots->size() > 0",
    "context Flight inv self.duration > 0",
    "context Airline inv: self.ceo->select(p | p.age > 30)->notEmpty()",
    "context Flight inv: self.duration.max() > 0",
    "context Person inv: self.salary > 0",
]


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else "data/synthetic"
    os.makedirs(out, exist_ok=True)
    with open(os.path.join(out, "specs.jsonl"), "w") as f:
        for i, text in enumerate(SPECS):
            f.write(json.dumps({"id": f"s{i}", "text": text, "context_hint": None}) + "\n")
    answers, verdicts = [], []
    for i in range(len(SPECS)):
        first = FIRST_VALID[i]
        for rank in range(1, RANKS + 1):
            valid = first is not None and rank >= first
            pool = VALID if valid else INVALID
            text = pool[(i + rank) % len(pool)]
            answers.append({"spec_id": f"s{i}", "rank": rank, "text": text})
            if valid:
                verdict = "correct" if CORRECT_AT.get(i) == rank else "incorrect"
                verdicts.append({"spec_id": f"s{i}", "rank": rank, "verdict": verdict})
    with open(os.path.join(out, "answers.jsonl"), "w") as f:
        f.writelines(json.dumps(a) + "\n" for a in answers)
    with open(os.path.join(out, "verdicts.jsonl"), "w") as f:
        f.writelines(json.dumps(v) + "\n" for v in verdicts)


if __name__ == "__main__":
    main()

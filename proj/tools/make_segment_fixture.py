#!/usr/bin/env python3
# Copyright 2026 The chartclean Authors.
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
"""Writes the segmenter fixture corpus.

Output format: one sentence per line, summaries separated by a blank line.
Sentences are built from templates, so the true boundaries are known without
running any segmenter. Usage:

    tools/make_segment_fixture.py > tests/fixtures/segment_corpus.txt
"""

import random

SUBJECTS = ["Sales", "The share of respondents", "Revenue", "The population",
            "Beer consumption", "The number of users", "Exports", "Average income"]
PLACES = ["the U.S.", "the U.K.", "Prince Edward Island ( P.E.I. )", "Washington, D.C.",
          "the E.U.", "St. Louis", "Mt. Vernon"]
VERBS = ["rose to", "fell to", "reached", "stood at", "amounted to"]
UNITS = ["million liters", "percent", "billion U.S. dollars", "thousand people",
         "million units"]
YEARS = list(range(1990, 2021))

TEMPLATES = [
    "{subj} in {place} {verb} {num} {unit} in {year}.",
    "In {year}, {lsubj} {verb} approx. {num} {unit}.",
    "{subj} {verb} {num} {unit} (see Fig. {small}) in {year}.",
    "According to Dr. {name}, {lsubj} {verb} {num} {unit}.",
    "{subj} {verb} {num} {unit}, i.e. about {pct} percent of the total.",
    "Between Jan. {year} and Dec. {year2}, {lsubj} {verb} {num} {unit}.",
    "{subj} grew by {pct}% vs. {pct2}% in {place} last year.",
    "Did {lsubj} really reach {num} {unit} in {year}?",
    "{subj} hit a record {num} {unit} in {year}!",
    "The survey by {initial}. {name} covered {int} households in {place} that year.",
    "\"{subj} {verb} {num} {unit},\" the report said.",
    "{subj} in No. {small} district {verb} {num} {unit} in {year}.",
    "{year} saw {lsubj} reach {num} {unit}.",
    "{subj} {verb} {num} {unit} e.g. in {place} during {year}.",
]

NAMES = ["Smith", "Johnson", "Nguyen", "Garcia", "Okafor", "Tanaka"]


def number(rng):
    return f"{rng.randint(0, 999)}.{rng.randint(0, 99)}" if rng.random() < 0.7 else str(
        rng.randint(1, 5000))


def sentence(rng):
    template = rng.choice(TEMPLATES)
    subj = rng.choice(SUBJECTS)
    year = rng.choice(YEARS)
    return template.format(
        subj=subj, lsubj=subj[0].lower() + subj[1:], place=rng.choice(PLACES),
        verb=rng.choice(VERBS), num=number(rng), unit=rng.choice(UNITS), year=year,
        year2=year + rng.randint(1, 5), small=rng.randint(1, 12), name=rng.choice(NAMES),
        pct=f"{rng.randint(1, 99)}.{rng.randint(0, 9)}", pct2=rng.randint(1, 99),
        initial=rng.choice("ABCDEFGHJKLMNPRSTW"), int=rng.randint(100, 9999))


def main():
    rng = random.Random(20240611)
    remaining = 200
    blocks = []
    while remaining:
        n = min(remaining, rng.randint(1, 5))
        blocks.append("\n".join(sentence(rng) for _ in range(n)))
        remaining -= n
    print("\n\n".join(blocks))


if __name__ == "__main__":
    main()

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
"""Compares the fixture's reference boundaries with NLTK's punkt tokenizer.

The fixture stores one sentence per line with blank lines between summaries,
and the rule-based segmenter reproduces it exactly (see the segment tests).
This script feeds each joined summary to punkt and prints every summary where
the two disagree. Usage:

    tools/compare_segmenters.py [--fixture PATH] [--out PATH]

The pretrained English punkt model is used when its data package is installed.
Otherwise the script falls back to an untrained punkt tokenizer seeded with the
repo's abbreviation list, and says so in the report header.
"""

import argparse
import pathlib
import sys

import nltk
from nltk.tokenize.punkt import PunktParameters, PunktSentenceTokenizer

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load_fixture(path):
    summaries, current = [], []
    for line in path.read_text(encoding="utf-8").splitlines():
        if line.strip():
            current.append(line.strip())
        elif current:
            summaries.append(current)
            current = []
    if current:
        summaries.append(current)
    return summaries


def load_abbreviations(path):
    out = set()
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.add(line.rstrip(".").lower())
    return out


def make_tokenizer():
    try:
        nltk.sent_tokenize("Probe.")
        return nltk.sent_tokenize, "punkt (pretrained English model)"
    except LookupError:
        params = PunktParameters()
        params.abbrev_types = load_abbreviations(ROOT / "data" / "abbreviations.txt")
        tok = PunktSentenceTokenizer(params)
        return tok.tokenize, "punkt (untrained, repo abbreviation list)"


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--fixture", type=pathlib.Path,
                        default=ROOT / "tests" / "fixtures" / "segment_corpus.txt")
    parser.add_argument("--out", type=pathlib.Path)
    args = parser.parse_args()

    tokenize, model = make_tokenizer()
    summaries = load_fixture(args.fixture)
    lines = [f"# reference: {args.fixture.name}", f"# other: {model}"]
    diverged = 0
    for index, sentences in enumerate(summaries):
        theirs = tokenize(" ".join(sentences))
        if theirs == sentences:
            continue
        diverged += 1
        lines.append(f"summary {index}:")
        lines.extend(f"  ours   | {s}" for s in sentences)
        lines.extend(f"  theirs | {s}" for s in theirs)
    total = sum(len(s) for s in summaries)
    lines.insert(2, f"# {len(summaries)} summaries, {total} sentences, "
                    f"{diverged} summaries diverge")
    report = "\n".join(lines) + "\n"
    if args.out:
        args.out.write_text(report, encoding="utf-8")
    else:
        sys.stdout.write(report)


if __name__ == "__main__":
    main()

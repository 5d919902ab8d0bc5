#!/usr/bin/env python3
#
# Copyright 2026 The Adversarial Text Normalizer Authors
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
#
"""Regenerates the demo evaluation corpus and the throughput bench corpus.

Both outputs are checked in under data/. Run from the repository root:

    python3 tools/gen_corpora.py
"""

import json
import os
import random

DATA = os.path.join(os.path.dirname(__file__), "..", "data")

SUBJECTS = ["people", "they", "those folks", "my neighbours", "the new hires",
            "our visitors", "the players", "some tourists", "the group",
            "these students", "the workers", "the fans", "newcomers"]
VERBS = ["are", "seem", "look", "always act like", "behave like",
         "were called", "keep acting like"]
NEUTRAL = ["friendly", "helpful", "welcome here", "great cooks", "kind",
           "good neighbours", "talented", "hard workers", "very polite",
           "fun to be around", "really smart", "our friends"]
FILLERS = ["honestly", "today", "in my opinion", "as usual", "to be fair",
           "on the bus", "at the market", "every single day", "again"]


def lexicon():
    with open(os.path.join(DATA, "classifier_lexicon.txt")) as f:
        return [w.strip() for w in f if w.strip() and not w.startswith("#")]


def sentence(rng, predicate):
    parts = [rng.choice(SUBJECTS), rng.choice(VERBS), predicate]
    if rng.random() < 0.6:
        parts.append(rng.choice(FILLERS))
    text = " ".join(parts)
    text = text[0].upper() + text[1:]
    return text + rng.choice([".", "!", ""])


def demo(rng, words):
    """Binary records; labels agree with a lexicon oracle except for a few
    implicit or counter-speech cases."""
    records = []
    for i in range(200):
        r = rng.random()
        if r < 0.45:
            text, label = sentence(rng, rng.choice(words)), "hate"
        elif r < 0.90:
            text, label = sentence(rng, rng.choice(NEUTRAL)), "nothate"
        elif r < 0.95:
            # Hateful without a lexicon word.
            text = sentence(rng, "not human and should go back")
            label = "hate"
        else:
            # Quoting a slur to reject it.
            text = "Calling anyone %s is wrong" % rng.choice(words)
            label = "nothate"
        records.append({"id": "demo-%03d" % i, "text": text, "label": label})
    return records


ZERO_WIDTH = ["\u200b", "\u200c", "\u200d", "\u2060", "\ufeff"]


def obfuscate(rng, text):
    out = []
    for word in text.split(" "):
        r = rng.random()
        if r < 0.15 and len(word) > 2:
            word = "".join(c + (rng.choice(ZERO_WIDTH) if rng.random() < 0.5 else "")
                           for c in word)
        elif r < 0.25 and len(word) > 3 and word.isalpha():
            word = ".".join(word)
        elif r < 0.35:
            word = "".join(chr(ord(c) + 0xFEE0) if "!" <= c <= "~" else c
                           for c in word)
        out.append(word)
    return " ".join(out)


def bench(rng, words):
    """Texts of 80 to 120 codepoints, a third of them obfuscated."""
    vocab = (words + NEUTRAL + FILLERS + SUBJECTS +
             ["the", "and", "very", "with", "about", "from", "there"])
    texts = []
    while len(texts) < 1000:
        target = rng.randint(70, 110)
        text = ""
        while len(text) < target:
            text = (text + " " + rng.choice(vocab)).strip()
        if rng.random() < 0.35:
            text = obfuscate(rng, text)
        if 80 <= len(text) <= 120:
            texts.append(text)
    return texts


def main():
    rng = random.Random(20260401)
    words = lexicon()
    with open(os.path.join(DATA, "demo_corpus.jsonl"), "w") as f:
        for record in demo(rng, words):
            f.write(json.dumps(record, ensure_ascii=False) + "\n")
    with open(os.path.join(DATA, "bench_corpus.jsonl"), "w") as f:
        for text in bench(rng, words):
            f.write(json.dumps({"text": text}, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
# Copyright 2026 The Convorec Authors
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
"""Regenerates the bundled resource files under data/.

Sources:
  --glove      GloVe vectors, either a text file (`word v1 ... vd`) or the
               JSON export shipped by the wink-embeddings-sg-100d npm package.
  --textblob   directory holding en-lexicon.txt and en-sentiment.xml
               (textblob/en in the textblob wheel).

The mini embedding table keeps only the words in data/fixture_vocab.txt.
"""

import argparse
import collections
import json
import os
import xml.etree.ElementTree as ET

# Entries appended to the sentiment lexicon after the derived ones.
EXTRA_POLARITY = {"need": 0.5}
NEGATORS = ["not", "n't", "never", "no"]
PENN_TAGS = set("""CC CD DT EX FW IN JJ JJR JJS LS MD NN NNS NNP NNPS PDT POS PRP PRP$
RB RBR RBS RP SYM TO UH VB VBD VBG VBN VBP VBZ WDT WP WP$ WRB $ # `` '' ( ) , . :""".split())


def read_glove(path, wanted):
    out = {}
    if path.endswith(".json"):
        with open(path) as f:
            table = json.load(f)
        dim = table["dimensions"]
        for w in wanted:
            vec = table["vectors"].get(w)
            if vec is not None:
                out[w] = vec[:dim]
        return out
    with open(path, encoding="utf-8") as f:
        for line in f:
            parts = line.rstrip("\n").split(" ")
            if parts[0] in wanted:
                out[parts[0]] = [float(x) for x in parts[1:]]
    return out


def write_embeddings(args):
    with open(os.path.join(args.data, "fixture_vocab.txt")) as f:
        vocab = [w.strip() for w in f if w.strip() and not w.startswith("#")]
    vectors = read_glove(args.glove, set(vocab))
    missing = [w for w in vocab if w not in vectors]
    if missing:
        print("not in source vectors:", " ".join(missing))
    with open(os.path.join(args.data, "embeddings_mini.txt"), "w") as f:
        for w in vocab:
            if w in vectors:
                f.write(w + " " + " ".join(repr(float(x)) for x in vectors[w]) + "\n")


def write_tagger_lexicon(args):
    rows = {}
    with open(os.path.join(args.textblob, "en-lexicon.txt"), encoding="utf-8") as f:
        for line in f:
            if line.startswith(";;;"):
                continue
            parts = line.split()
            if len(parts) < 2:
                continue
            word, tag = parts[0], parts[1].split("|")[0]
            if word != word.lower() or word in rows or tag not in PENN_TAGS:
                continue
            rows[word] = tag
    with open(os.path.join(args.data, "tagger_lexicon.txt"), "w") as f:
        f.write("# word TAG (most frequent tag), from Brill's tagger lexicon v1.14\n")
        for word in sorted(rows):
            f.write(f"{word} {rows[word]}\n")


def write_sentiment_lexicon(args):
    senses = collections.defaultdict(list)
    root = ET.parse(os.path.join(args.textblob, "en-sentiment.xml")).getroot()
    for node in root.iter("word"):
        form = node.get("form").lower()
        if " " in form or form in NEGATORS:
            continue
        senses[form].append(float(node.get("polarity")))
    with open(os.path.join(args.data, "sentiment_lexicon.txt"), "w") as f:
        f.write("# word<TAB>polarity, mean over senses of the pattern sentiment lexicon\n")
        for form in sorted(senses):
            mean = sum(senses[form]) / len(senses[form])
            f.write(f"{form}\t{mean:.3f}\n")
        f.write("# purchase-intent verbs\n")
        for form, polarity in EXTRA_POLARITY.items():
            f.write(f"{form}\t{polarity:.3f}\n")
        for neg in NEGATORS:
            f.write(f"NEG\t{neg}\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--glove", required=True)
    parser.add_argument("--textblob", required=True)
    parser.add_argument("--data", default=os.path.join(os.path.dirname(__file__), "..", "data"))
    args = parser.parse_args()
    write_embeddings(args)
    write_tagger_lexicon(args)
    write_sentiment_lexicon(args)


if __name__ == "__main__":
    main()

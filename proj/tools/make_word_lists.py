#!/usr/bin/env python3
"""Regenerate the bundled word lists under data/.

Source: the Webster's Second International word list (public domain) as
packaged by the `english-words` PyPI distribution (web2_alpha_lower).
Only words whose letters are all distinct are kept.
"""
import argparse
import pathlib
import pickle

import english_words  # noqa: F401  (located via its package directory)


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data"))
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    data = pathlib.Path(english_words.__file__).parent / "data" / "web2_alpha_lower.pickle"
    words = pickle.loads(data.read_bytes())

    for length in range(3, 10):
        selected = sorted(w for w in words
                          if len(w) == length and w.isascii() and w.isalpha() and len(set(w)) == length)
        (out / f"en_{length}.txt").write_text("\n".join(selected) + "\n")

    # Evenly spaced 500-word sample of the 5-letter list, used by the
    # end-to-end suites where the full list is too slow for the clique solver.
    five = (out / "en_5.txt").read_text().split()
    sample = [five[i * len(five) // 500] for i in range(500)]
    (out / "en_5_small.txt").write_text("\n".join(sample) + "\n")


if __name__ == "__main__":
    main()

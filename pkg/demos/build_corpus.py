"""Regenerate the bundled category files (or write them to a directory)."""

import sys

from gvcat.corpus import write_corpus

if __name__ == "__main__":
    target = sys.argv[1] if len(sys.argv) > 1 else None
    for path in write_corpus(target):
        print(path)

"""Regenerate the Gray-cycle golden files, or check them with --check."""
import argparse
import sys
from pathlib import Path

from ledgerkernel import emit_trace, emit_walk, gray_cycle, walk_to_trace

CORPUS = Path(__file__).resolve().parent.parent / "tests" / "corpus"


def golden():
    w = gray_cycle(3)
    return {
        "gray3.trace": emit_trace(walk_to_trace(w, 1, cyclic=True)),
        "gray3.walk": emit_walk(w),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()
    stale = []
    for name, text in golden().items():
        path = CORPUS / name
        if args.check:
            if not path.exists() or path.read_text() != text:
                stale.append(name)
        else:
            path.write_text(text)
            print(f"wrote {path}")
    if stale:
        print("stale: " + ", ".join(stale))
        sys.exit(1)


if __name__ == "__main__":
    main()

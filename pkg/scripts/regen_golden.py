"""Rewrite tests/golden/table{1,4,5}.txt from the current build.

Review the diff by hand before committing: the golden files are the
reference the CLI tests compare against.
"""

import argparse
import io
from pathlib import Path

from smoothsum.cli import run

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--check", action="store_true", help="only report differences")
    args = p.parse_args()
    stale = []
    for which in ("1", "4", "5"):
        buf = io.StringIO()
        if run(["table", which], stdout=buf) != 0:
            raise SystemExit(f"table {which} failed")
        path = GOLDEN / f"table{which}.txt"
        current = path.read_text(encoding="utf-8") if path.exists() else None
        if current != buf.getvalue():
            stale.append(path.name)
            if not args.check:
                path.write_text(buf.getvalue(), encoding="utf-8")
    if stale:
        print(("stale: " if args.check else "rewrote: ") + ", ".join(stale))
    else:
        print("golden files up to date")
    raise SystemExit(1 if stale and args.check else 0)


if __name__ == "__main__":
    main()

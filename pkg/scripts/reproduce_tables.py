"""Write every n=2 hom table (plain and completed) to a directory and diff
them against the bundled golden files."""
import argparse
import pathlib

from fiatcat.decat import completed
from fiatcat.tables import completed_table, hom_table

GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="tables_out", help="output directory")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    jobs = {f"hom_table_{c}2.txt": hom_table(c, 2) for c in ("A", "B")}
    jobs.update({f"completed_{c}2.txt": completed_table(completed(c, 2), c) for c in ("A", "B")})
    bad = 0
    for name, table in jobs.items():
        text = table.text()
        (out / name).write_text(text, encoding="utf-8")
        same = (GOLDEN / name).read_text(encoding="utf-8") == text
        bad += not same
        print(f"{name:<22} {'matches golden' if same else 'DIFFERS from golden'}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Write every table the CLI can produce into a directory, in JSON and LaTeX.

    python scripts/emit_tables.py out/
"""

import argparse
import contextlib
import io
import pathlib
import sys

from g2spheres.cli import main as cli

JOBS = [
    ("pkf_s6", ["pkf", "--space", "s6"]),
    ("pkf_s7", ["pkf", "--space", "s7"]),
    ("local_su3", ["local-k", "--group", "su3"]),
    ("local_g2", ["local-k", "--group", "g2"]),
    ("restrict", ["restrict"]),
    ("tables_s6", ["tables", "--space", "s6"]),
    ("tables_s7", ["tables", "--space", "s7"]),
    ("balls", ["eval-ball"]),
]


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("outdir", type=pathlib.Path)
    p.add_argument("--lambda", dest="lam", default="symbolic")
    args = p.parse_args(argv)
    args.outdir.mkdir(parents=True, exist_ok=True)
    for stem, argv_ in JOBS:
        for fmt, ext in (("json", "json"), ("latex", "tex")):
            buf = io.StringIO()
            with contextlib.redirect_stdout(buf):
                code = cli(argv_ + ["--format", fmt, "--lambda", args.lam])
            if code:
                print(f"{stem}.{ext}: exit {code}", file=sys.stderr)
                return code
            (args.outdir / f"{stem}.{ext}").write_text(buf.getvalue())
            print(args.outdir / f"{stem}.{ext}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

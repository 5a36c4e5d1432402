"""Runs every case in cases.txt and compares with the stored .out file.

usage: golden.py BINARY [--update] [--threads N]
"""

import argparse
import pathlib
import shlex
import subprocess
import sys

HERE = pathlib.Path(__file__).resolve().parent


def cases():
    for line in (HERE / "cases.txt").read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, args = (part.strip() for part in line.split("|", 1))
        yield name, shlex.split(args)


def render(binary, args, threads):
    extra = ["--threads", str(threads)] if threads else []
    proc = subprocess.run([binary, *args, *extra, str(HERE / "session.cl")], capture_output=True, text=True)
    return f"{proc.stdout}--- stderr\n{proc.stderr}--- exit {proc.returncode}\n"


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("binary")
    parser.add_argument("--update", action="store_true")
    parser.add_argument("--threads", type=int, default=0)
    opts = parser.parse_args()

    failures = 0
    for name, args in cases():
        got = render(opts.binary, args, opts.threads)
        path = HERE / f"{name}.out"
        if opts.update:
            path.write_text(got)
        elif not path.exists() or path.read_text() != got:
            failures += 1
            print(f"golden mismatch: {name}")
            print(got)
    print(f"{failures} golden mismatches")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

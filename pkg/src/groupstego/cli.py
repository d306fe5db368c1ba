"""Command line front end: embed, extract, analyze, compare.

Exit codes::

    0  success
    1  I/O failure
    2  capacity exhausted
    3  unsupported image format
    4  not a stego image (bad magic or unknown algorithm id)
    5  corrupt payload
    6  --algo disagrees with the stego header
    7  cover/stego dimension mismatch
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import CODECS, codec_for
from .bitplane import bits_from_octets, octets_from_bits
from .errors import (CapacityExhausted, CorruptPayload, DimensionMismatch,
                     NotAStegoImage, StegoError, UnsupportedAlgorithm,
                     UnsupportedImageFormat)
from .metrics import format_db, quality_report
from .raster import ALGORITHM_NAMES, load_png, read_header, save_png

EXIT_OK = 0
EXIT_IO = 1
EXIT_CAPACITY = 2
EXIT_FORMAT = 3
EXIT_NOT_STEGO = 4
EXIT_CORRUPT = 5
EXIT_ALGO_MISMATCH = 6
EXIT_DIMENSIONS = 7

COMPARE_FIELDS = ["algorithm", "psnr_db", "bits_embedded", "components_used",
                  "bits_per_component", "index_components", "status"]


class AlgoMismatch(StegoError):
    pass


_EXIT_CODES = [
    (CapacityExhausted, EXIT_CAPACITY),
    (UnsupportedImageFormat, EXIT_FORMAT),
    (NotAStegoImage, EXIT_NOT_STEGO),
    (UnsupportedAlgorithm, EXIT_NOT_STEGO),
    (CorruptPayload, EXIT_CORRUPT),
    (AlgoMismatch, EXIT_ALGO_MISMATCH),
    (DimensionMismatch, EXIT_DIMENSIONS),
    (OSError, EXIT_IO),
]


def _read_message(args) -> bytes:
    if args.message_file is not None:
        with open(args.message_file, "rb") as fh:
            return fh.read()
    return args.message.encode("utf-8")


def cmd_embed(args) -> int:
    cover = load_png(args.cover)
    data = _read_message(args)
    stego, stats = codec_for(args.algo).embed(cover, bits_from_octets(data))
    save_png(stego, args.out)
    if args.stats:
        record = {"algorithm": args.algo}
        record.update(quality_report(cover, stego).as_dict())
        record.update(stats.as_dict())
        with open(args.stats, "w") as fh:
            json.dump(record, fh, indent=2)
    return EXIT_OK


def cmd_extract(args) -> int:
    stego = load_png(args.stego)
    header = read_header(stego)
    if args.algo and ALGORITHM_NAMES[header.algorithm_id] != args.algo:
        raise AlgoMismatch(
            f"--algo {args.algo} but the header says "
            f"{ALGORITHM_NAMES[header.algorithm_id]}")
    data = octets_from_bits(codec_for(header.algorithm_id).extract(stego))
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return EXIT_OK


def cmd_analyze(args) -> int:
    report = quality_report(load_png(args.cover), load_png(args.stego))
    if args.json:
        print(json.dumps(report.as_dict()))
    else:
        print(f"mse                  {report.mse:.6g}")
        print(f"psnr_db              {format_db(report.psnr_db)}")
        print(f"max_component_delta  {report.max_component_delta}")
        print(f"components_changed   {report.components_changed}")
    return EXIT_OK


def compare_rows(cover, data: bytes) -> list[dict]:
    """Embed ``data`` with every codec and verify each round trip.

    A codec that fails gets a row with an error status instead of numbers.
    """
    secret = bits_from_octets(data)
    rows = []
    for name, codec in CODECS.items():
        row = dict.fromkeys(COMPARE_FIELDS, "")
        row["algorithm"] = name
        try:
            stego, stats = codec.embed(cover, secret)
            if codec.extract(stego) != secret:
                raise CorruptPayload("round-trip verification failed")
        except StegoError as exc:
            row["status"] = f"error: {type(exc).__name__}: {exc}"
            rows.append(row)
            continue
        report = quality_report(cover, stego)
        row.update(
            psnr_db=format_db(report.psnr_db),
            bits_embedded=stats.payload_bits_embedded,
            components_used=stats.components_visited,
            bits_per_component=stats.bits_per_component,
            index_components=stats.index_components,
            status="ok",
        )
        rows.append(row)
    return rows


def _format_table(rows: list[dict]) -> str:
    def cell(v):
        return f"{v:.4f}" if isinstance(v, float) else str(v)

    widths = {f: max(len(f), *(len(cell(r[f])) for r in rows)) for f in COMPARE_FIELDS}
    lines = ["  ".join(f.ljust(widths[f]) for f in COMPARE_FIELDS)]
    for r in rows:
        lines.append("  ".join(cell(r[f]).ljust(widths[f]) for f in COMPARE_FIELDS))
    return "\n".join(line.rstrip() for line in lines)


def cmd_compare(args) -> int:
    rows = compare_rows(load_png(args.cover), args.message.encode("utf-8"))
    print(_format_table(rows))
    if args.out:
        with open(args.out, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=COMPARE_FIELDS)
            writer.writeheader()
            writer.writerows(rows)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupstego", description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)
    algos = sorted(CODECS)

    p = sub.add_parser("embed", help="hide a message in a PNG")
    p.add_argument("--algo", choices=algos, required=True)
    p.add_argument("--cover", required=True)
    p.add_argument("--out", required=True)
    msg = p.add_mutually_exclusive_group(required=True)
    msg.add_argument("--message", help="UTF-8 text")
    msg.add_argument("--message-file", help="file with arbitrary bytes")
    p.add_argument("--stats", help="write embed statistics as JSON here")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("extract", help="recover a hidden message")
    p.add_argument("--stego", required=True)
    p.add_argument("--algo", choices=algos, help="default: read from the header")
    p.add_argument("--out", help="default: standard output")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("analyze", help="MSE / PSNR between cover and stego")
    p.add_argument("--cover", required=True)
    p.add_argument("--stego", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("compare", help="run all codecs on one cover and message")
    p.add_argument("--cover", required=True)
    p.add_argument("--message", required=True)
    p.add_argument("--out", help="write the table as CSV here")
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except tuple(exc for exc, _ in _EXIT_CODES) as exc:
        for kind, code in _EXIT_CODES:
            if isinstance(exc, kind):
                print(f"groupstego {args.command}: {exc}", file=sys.stderr)
                return code
        raise


if __name__ == "__main__":
    sys.exit(main())

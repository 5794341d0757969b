"""Command-line front end.

Exit codes: 0 success, 2 environment / IO problem, 3 malformed input,
4 calibration failure.
"""
from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import replace
from pathlib import Path

from . import __version__
from .config import SpecError, parse_scenarios, read_detector_config, write_detector_config
from .detector import ChannelPolicy, calibrate, detect
from .errors import IslandwtError, NotSeparable
from .filters import FilterName
from .plot import render_svg
from .report import TRANSFORMS, ReportFormat, UnknownTransform, compare
from .synth import EventKind, EventLabel, MalformedWaveform, Waveform, catalog, normal_scenarios, synthesize

EXIT_OK = 0
EXIT_IO = 2
EXIT_INPUT = 3
EXIT_CALIBRATION = 4

LABELS_FILE = "labels.csv"
LABELS_HEADER = ("scenario", "kind", "onset_sample", "seed")


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _fail(code, message):
    raise CliError(code, message)


# --- labelled waveform directories ------------------------------------------


def write_labels(directory: Path, rows) -> None:
    with open(directory / LABELS_FILE, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(LABELS_HEADER)
        writer.writerows(rows)


def read_labeled_dir(directory) -> list:
    """``(name, waveform, kind)`` for every row of ``labels.csv``."""
    directory = Path(directory)
    if not directory.is_dir():
        _fail(EXIT_INPUT, f"{directory}: not a directory")
    labels = directory / LABELS_FILE
    if not labels.is_file():
        _fail(EXIT_INPUT, f"{directory}: missing {LABELS_FILE}")
    out = []
    with open(labels, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or tuple(h.strip() for h in header) != LABELS_HEADER:
            _fail(EXIT_INPUT, f"{labels}: line 1: expected header {','.join(LABELS_HEADER)}")
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 4:
                _fail(EXIT_INPUT, f"{labels}: line {lineno}: expected 4 fields")
            name, kind, onset, _seed = row
            try:
                kind = EventKind(kind)
                onset = int(onset) if onset.strip() else None
            except ValueError:
                _fail(EXIT_INPUT, f"{labels}: line {lineno}: bad kind or onset in {row}")
            w = _load_waveform(directory / f"{name}.csv", EventLabel(kind, onset))
            out.append((name, w, kind))
    if not out:
        _fail(EXIT_INPUT, f"{labels}: no labelled waveforms")
    return out


def _load_waveform(path, labels=None) -> Waveform:
    try:
        return Waveform.read_csv(path, labels=labels)
    except FileNotFoundError:
        _fail(EXIT_INPUT, f"{path}: no such waveform file")
    except MalformedWaveform as exc:
        _fail(EXIT_INPUT, f"{path}: {exc}")


def _load_config(path):
    if path is None:
        _fail(EXIT_IO, "a detector config is required (--config)")
    if not Path(path).is_file():
        _fail(EXIT_IO, f"{path}: config file not found")
    try:
        return read_detector_config(path)
    except SpecError as exc:
        _fail(EXIT_INPUT, str(exc))


# --- commands ----------------------------------------------------------------


def cmd_synth(args) -> int:
    if args.catalog:
        scenarios = catalog()
    elif args.spec:
        try:
            text = Path(args.spec).read_text()
        except OSError as exc:
            _fail(EXIT_IO, f"{args.spec}: {exc.strerror}")
        try:
            scenarios = parse_scenarios(text, source=str(args.spec))
        except SpecError as exc:
            _fail(EXIT_INPUT, str(exc))
    else:
        _fail(EXIT_INPUT, "give a scenario spec file or --catalog")
    if args.with_normal:
        scenarios = scenarios + normal_scenarios()
    if args.seed is not None:
        scenarios = [replace(s, seed=args.seed + i) for i, s in enumerate(scenarios)]
    out = Path(args.out or ".")
    rows = []
    try:
        out.mkdir(parents=True, exist_ok=True)
        for sc in scenarios:
            w = synthesize(sc)
            w.write_csv(out / f"{sc.label}.csv")
            onset = "" if w.labels.onset_sample is None else str(w.labels.onset_sample)
            rows.append((sc.label, sc.kind.value, onset, str(sc.seed)))
        write_labels(out, rows)
    except OSError as exc:
        _fail(EXIT_IO, f"{out}: {exc.strerror or exc}")
    except IslandwtError as exc:
        _fail(EXIT_INPUT, str(exc))
    print(f"wrote {len(rows)} waveforms to {out}")
    return EXIT_OK


def cmd_detect(args) -> int:
    cfg = _load_config(args.config)
    w = _load_waveform(args.waveform)
    try:
        v = detect(w, cfg)
    except IslandwtError as exc:
        _fail(EXIT_INPUT, str(exc))
    onset = "" if v.onset_sample is None else str(v.onset_sample)
    print(f"{v.kind.value},{v.indices.std:.6g},{v.indices.energy:.6g},{onset}")
    return EXIT_OK


def cmd_compare(args) -> int:
    labeled = read_labeled_dir(args.waveforms)
    cfg = _load_config(args.config) if args.config else None
    names = args.transforms.split(",") if args.transforms is not None else list(TRANSFORMS)
    fmt = ReportFormat.CSV if args.format == "csv" else ReportFormat.PRETTY
    try:
        report = compare(labeled, names, ChannelPolicy(args.policy), config=cfg, fmt=fmt)
    except UnknownTransform as exc:
        _fail(EXIT_INPUT, str(exc))
    except IslandwtError as exc:
        _fail(EXIT_INPUT, str(exc))
    text = report.render(per_scenario=args.per_scenario)
    if args.out:
        _write_new(Path(args.out), text, args.force)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _write_new(path: Path, text: str, force: bool):
    if path.exists() and not force:
        _fail(EXIT_IO, f"{path}: exists (use --force to overwrite)")
    try:
        path.write_text(text)
    except OSError as exc:
        _fail(EXIT_IO, f"{path}: {exc.strerror or exc}")


def cmd_plot(args) -> int:
    cfg = _load_config(args.config)
    w = _load_waveform(args.waveform)
    out = Path(args.out or Path(args.waveform).with_suffix(".svg"))
    if out.exists() and not args.force:
        _fail(EXIT_IO, f"{out}: exists (use --force to overwrite)")
    try:
        svg = render_svg(w, cfg, title=Path(args.waveform).stem)
    except IslandwtError as exc:
        _fail(EXIT_INPUT, str(exc))
    _write_new(out, svg, True)
    print(f"wrote {out}")
    return EXIT_OK


def cmd_calibrate(args) -> int:
    labeled = read_labeled_dir(args.waveforms)
    try:
        cfg = calibrate([(w, k) for _, w, k in labeled], FilterName.parse(args.filter), ChannelPolicy(args.policy))
    except NotSeparable as exc:
        print(f"not separable: max fault energy {exc.fault_max:.6g} >= "
              f"min islanding energy {exc.islanding_min:.6g}", file=sys.stderr)
        return EXIT_CALIBRATION
    except IslandwtError as exc:
        _fail(EXIT_INPUT, str(exc))
    out = Path(args.out or "detector.ini")
    fs = labeled[0][1].sample_rate
    try:
        write_detector_config(cfg, out, synthesis={"sample_rate": f"{fs:g}", "nominal_frequency": "50"})
    except OSError as exc:
        _fail(EXIT_IO, f"{out}: {exc.strerror or exc}")
    print(f"wrote {out}: gate_threshold={cfg.gate_threshold:.6g} class_threshold={cfg.class_threshold:.6g}")
    return EXIT_OK


# --- argument parsing ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="override scenario seeds (seed + index)")
    common.add_argument("--out", default=None, help="output file or directory")
    common.add_argument("--force", action="store_true", help="overwrite existing output files")

    parser = argparse.ArgumentParser(prog="islandwt", description=__doc__.splitlines()[0], parents=[common])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", parents=[common], help="synthesize waveforms to CSV")
    p.add_argument("spec", nargs="?", help="INI scenario spec file")
    p.add_argument("--catalog", action="store_true", help="the fixed 12-scenario catalog")
    p.add_argument("--with-normal", action="store_true", help="also write two disturbance-free cases")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("detect", parents=[common], help="classify one waveform CSV")
    p.add_argument("waveform")
    p.add_argument("--config", help="detector INI config")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("compare", parents=[common], help="index table across transforms")
    p.add_argument("waveforms", help="directory with labels.csv")
    p.add_argument("--transforms", default=None, help=f"comma list from {','.join(TRANSFORMS)}")
    p.add_argument("--format", choices=("pretty", "csv"), default="pretty")
    p.add_argument("--per-scenario", action="store_true", help="one row per scenario and transform")
    p.add_argument("--policy", default=ChannelPolicy.WORST_PHASE.value, choices=[c.value for c in ChannelPolicy])
    p.add_argument("--config", default=None, help="detector config; adds verdicts to per-scenario rows")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("plot", parents=[common], help="SVG of signal, A1 and D1")
    p.add_argument("waveform")
    p.add_argument("--config", help="detector INI config")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("calibrate", parents=[common], help="fit detector thresholds")
    p.add_argument("waveforms", help="directory with labels.csv")
    p.add_argument("--filter", default=FilterName.HAAR.value, choices=[f.value for f in FilterName])
    p.add_argument("--policy", default=ChannelPolicy.WORST_PHASE.value, choices=[c.value for c in ChannelPolicy])
    p.set_defaults(func=cmd_calibrate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"islandwt {args.command}: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())

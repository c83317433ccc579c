"""Command-line entry point.

Exit codes: 0 success, 2 validation failure, 64 usage errors (including
malformed configuration strings), 74 I/O errors.  Every randomized
subcommand takes an explicit --seed; nothing is seeded from the clock.
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys
from pathlib import Path

import click

from . import design_space, gallery, grammar, scoring
from .simulate import (
    load_noise,
    responses_from_jsonl,
    responses_to_jsonl,
    simulate as run_simulation,
)
from .data import Dataset, dataset_from_csv, dataset_to_csv, gen_dataset, gen_datasets, sample_seven
from .errors import (
    ConfigSemanticError,
    ConfigSyntaxError,
    OmvkitError,
)
from .render import DESIGNS, RenderSpec, render
from .trials import build_trials, trials_from_jsonl, trials_to_jsonl

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_USAGE = 64
EXIT_IO = 74


def _write_output(out: str | None, content: str | bytes) -> None:
    if isinstance(content, str):
        content = content.encode("utf-8")
    if out is None or out == "-":
        sys.stdout.buffer.write(content)
    else:
        Path(out).write_bytes(content)


def _parse_config(text: str) -> design_space.VisConfig:
    try:
        return grammar.parse(text)
    except (ConfigSyntaxError, ConfigSemanticError) as exc:
        position = getattr(exc, "position", None)
        where = f" (byte {position})" if position is not None else ""
        raise click.UsageError(f"bad config string{where}: {exc}") from exc


def _load_dataset(path: str) -> Dataset:
    return dataset_from_csv(Path(path).read_text())


@click.group()
def cli():
    """Tools for visualizing values spanning many orders of magnitude."""


@cli.command("enumerate")
@click.option("--viable", is_flag=True, help="Keep only constraint-satisfying configs.")
@click.option("--dedupe", is_flag=True, help="Collapse mirror-symmetric duplicates.")
@click.option("--format", "fmt_", type=click.Choice(["text", "csv"]), default="text")
@click.option("--out", default=None, help="Output file (default stdout).")
def enumerate_cmd(viable, dedupe, fmt_, out):
    """List design-space configurations, one per line."""
    if dedupe:
        configs = design_space.canonical_set()
        if not viable:
            configs = tuple(
                dict.fromkeys(design_space.canonicalize(c) for c in design_space.enumerate_all())
            )
    else:
        configs = design_space.viable_set() if viable else design_space.enumerate_all()
    if fmt_ == "text":
        body = "".join(grammar.serialize(c) + "\n" for c in configs)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            ["mark", "exp_channel", "mant_channel", "other_type", "other_channel", "eplusm"]
        )
        for c in configs:
            writer.writerow(
                [c.mark.value, c.exp_channel.value, c.mant_channel.value,
                 c.other_type.value, c.other_channel.value, str(c.eplusm).lower()]
            )
        body = buf.getvalue()
    _write_output(out, body)


@cli.command("validate")
@click.argument("config")
def validate_cmd(config):
    """Check one configuration; exits 0 when viable, 2 with violations listed."""
    cfg = _parse_config(config)
    verdict = design_space.validate(cfg)
    if verdict.viable:
        click.echo("viable")
        return
    for rule in verdict.violations:
        click.echo(rule)
    sys.exit(EXIT_VALIDATION)


@cli.command("render")
@click.option("--config", "config_text", default=None, help="Generic config string.")
@click.option("--design", type=click.Choice(DESIGNS), default=None)
@click.option("--data", "data_path", required=True, help="CSV of label,value rows.")
@click.option("--out", required=True)
@click.option("--width", type=float, default=720.0)
@click.option("--height", type=float, default=480.0)
@click.option("--highlight", default="", help="Comma-separated category labels.")
@click.option("--domain-min", type=int, default=None)
@click.option("--domain-max", type=int, default=None)
def render_cmd(config_text, design, data_path, out, width, height, highlight,
               domain_min, domain_max):
    """Render one chart to SVG."""
    if (config_text is None) == (design is None):
        raise click.UsageError("give exactly one of --config or --design")
    dataset = _load_dataset(data_path)
    marks = tuple(h for h in highlight.split(",") if h)
    cfg = _parse_config(config_text) if config_text else None
    spec = RenderSpec(
        design=design or "generic",
        dataset=dataset,
        width=width,
        height=height,
        highlight=marks,
        config=cfg,
        domain_min_exponent=domain_min,
        domain_max_exponent=domain_max,
    )
    _write_output(out, render(spec))


@cli.command("gallery")
@click.option("--out", "out_dir", required=True)
@click.option("--data", "data_path", default=None,
              help="CSV dataset; defaults to a built-in 7-row sample.")
def gallery_cmd(out_dir, data_path):
    """Render every canonical viable configuration into a directory."""
    if data_path:
        dataset = _load_dataset(data_path)
    else:
        dataset = sample_seven(gen_dataset(0, seed=0))
    names = gallery.write_gallery(list(design_space.canonical_set()), dataset, out_dir)
    click.echo(f"wrote {len(names)} panels to {out_dir}")


@cli.command("gen-data")
@click.option("--n", type=int, default=500, show_default=True)
@click.option("--seed", type=int, required=True)
@click.option("--out", "out_dir", required=True)
def gen_data_cmd(n, seed, out_dir):
    """Generate seeded datasets as CSV files plus a manifest."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    manifest = ["id,seed,file"]
    for ds in gen_datasets(n, seed):
        name = f"dataset-{ds.id:04d}.csv"
        (out / name).write_text(dataset_to_csv(ds))
        manifest.append(f"{ds.id},{ds.seed},{name}")
    (out / "manifest.csv").write_text("\n".join(manifest) + "\n")
    click.echo(f"wrote {n} datasets to {out_dir}")


@cli.command("trials")
@click.option("--dataset", "dataset_path", required=True)
@click.option("--seed", type=int, required=True)
@click.option("--out", required=True)
@click.option("--ratio-convention", type=click.Choice(["larger", "ordered"]),
              default="larger", show_default=True)
def trials_cmd(dataset_path, seed, out, ratio_convention):
    """Build the 28-trial sequence for one dataset."""
    dataset = _load_dataset(dataset_path)
    trials = build_trials(dataset, seed, ratio_convention=ratio_convention)
    _write_output(out, trials_to_jsonl(trials))


@cli.command("score")
@click.option("--responses", "responses_path", required=True)
@click.option("--trials", "trials_path", default=None,
              help="Needed when response rows do not embed their trial.")
@click.option("--out", required=True)
def score_cmd(responses_path, trials_path, out):
    """Score responses with both error measures."""
    trials = None
    if trials_path:
        trials = trials_from_jsonl(Path(trials_path).read_text())
    records = responses_from_jsonl(Path(responses_path).read_text(), trials)
    lines = []
    for r in records:
        s = scoring.score(r)
        lines.append(
            json.dumps(
                {
                    "design": r.design,
                    "participant": r.participant,
                    "trial": r.trial_index,
                    "task": r.trial.task,
                    "relation": r.trial.relation,
                    "abs_rel": s.abs_rel,
                    "log_rel_abs": s.log_rel_abs,
                    "time_s": r.time_s,
                    "confidence": r.confidence,
                },
                sort_keys=True,
            )
        )
    _write_output(out, "\n".join(lines) + "\n")


@cli.command("simulate")
@click.option("--design", type=click.Choice(DESIGNS), required=True)
@click.option("--participants", type=int, required=True)
@click.option("--seed", type=int, required=True)
@click.option("--noise", "noise_path", default=None,
              help="JSON noise parameters, flat or keyed by design.")
@click.option("--out", required=True)
def simulate_cmd(design, participants, seed, noise_path, out):
    """Run simulated respondents and write their responses."""
    noise = None
    if noise_path:
        noise = load_noise(Path(noise_path).read_text(), design)
    records = run_simulation(design, participants, noise, seed)
    _write_output(out, responses_to_jsonl(records))


@cli.command("analyze")
@click.option("--scores", "responses_path", required=True,
              help="Response records (JSONL with embedded trials).")
@click.option("--bootstrap", "reps", type=int, default=10_000, show_default=True)
@click.option("--seed", type=int, required=True)
@click.option("--out", required=True)
def analyze_cmd(responses_path, reps, seed, out):
    """Aggregate per design and task, with bootstrap confidence intervals."""
    records = responses_from_jsonl(Path(responses_path).read_text())
    summaries = scoring.aggregate(records)
    rows = scoring.analysis_report(summaries, reps=reps, seed=seed)
    _write_output(out, scoring.report_to_csv(rows))


@cli.command("serve")
@click.option("--port", type=int, default=None,
              help="Defaults to $OMV_PORT, then 8000.")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--ui", "ui_dir", default=None, help="Static assets directory.")
def serve_cmd(port, host, ui_dir):
    """Run the HTTP/JSON service."""
    import uvicorn

    from .service import create_app

    if port is None:
        port = int(os.environ.get("OMV_PORT", "8000"))
    uvicorn.run(create_app(ui_dir=ui_dir), host=host, port=port, log_level="warning")


def main(argv: list[str] | None = None) -> int:
    """Invoke the CLI and map failures onto the documented exit codes."""
    try:
        cli.main(args=argv, standalone_mode=False)
        return EXIT_OK
    except click.UsageError as exc:
        exc.show()
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return EXIT_USAGE
    except SystemExit as exc:
        return int(exc.code or 0)
    except OSError as exc:
        click.echo(f"i/o error: {exc}", err=True)
        return EXIT_IO
    except OmvkitError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1


def entry() -> None:
    sys.exit(main())

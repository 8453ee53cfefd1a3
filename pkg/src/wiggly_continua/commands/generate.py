"""The ``generate`` command: write a corpus set as a dataset file."""

import logging
from pathlib import Path

import click

from ..formats import Dataset, write_dataset, write_points_csv
from ..generators import FOUR_CORNERS_SCHEDULES, generate
from ..models.generators import Family, GeneratorSpec
from .errors import exit_codes

logger = logging.getLogger("wiggly-continua.commands")


@click.command("generate")
@click.option(
    "--family",
    type=click.Choice([f.value for f in Family]),
    required=True,
    help="Corpus family to generate",
)
@click.option("--level", type=int, help="Construction level")
@click.option("--levels", type=int, help="Number of comb levels")
@click.option("--base-level", type=int, help="Level of the base curve of a lift")
@click.option("--alpha", type=float, help="Gap ratio of cantor_alpha")
@click.option(
    "--schedule",
    type=click.Choice(FOUR_CORNERS_SCHEDULES),
    help="Diagonal schedule of four_corners",
)
@click.option("--pitch", type=float, help="Sampling pitch")
@click.option("--copies", type=int, help="Copies per comb_R_alpha level")
@click.option("--c", "c", help="Julia parameter (curated value, e.g. i or -2)")
@click.option("--depth", type=int, help="Backward-orbit depth of a Julia set")
@click.option("--seed-count", type=int, help="Extra random Julia seeds")
@click.option("--seed", type=int, help="Random seed for Julia seeds")
@click.option(
    "--resolution",
    type=float,
    help="Target resolution; the level is refined until it is met",
)
@click.option(
    "-o",
    "--output",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Dataset file (default: <family>.jsonl)",
)
@click.option("--csv", "write_csv", is_flag=True, help="Also write a CSV mirror")
@exit_codes
def generate_command(
    family: str,
    resolution: float | None,
    output: Path | None,
    write_csv: bool,
    **params: int | float | str | None,
) -> None:
    """Generate a corpus set and write it as a JSONL dataset."""
    spec = GeneratorSpec(
        family=Family(family),
        params={k: v for k, v in params.items() if v is not None},
        resolution_target=resolution,
    )
    generated = generate(spec)
    output = output or Path(f"{family}.jsonl")
    dataset = Dataset.from_generated(generated)
    write_dataset(dataset, output)
    if write_csv:
        write_points_csv(generated.sample, output.with_suffix(".csv"))
    click.echo(
        f"{output}: {generated.sample.count} records, "
        f"resolution {generated.sample.resolution:.6g}"
    )

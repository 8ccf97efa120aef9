from fractions import Fraction
from typing import Optional

import pandas as pd
from jinja2 import Template


def render_markdown_table(frame: pd.DataFrame, float_format: str = ".4g") -> str:
    """
    Render a DataFrame as a pipe table; missing values show as empty cells.
    """
    display = frame.astype(object).where(frame.notna(), None)
    return display.to_markdown(index=False, floatfmt=float_format, missingval="")


def render_experiment_report(name: str, generator: str, instances: int, seed: int,
                             summary: pd.DataFrame, truncation: Optional[pd.DataFrame] = None,
                             popularity: Optional[Fraction] = None,
                             sweep: Optional[pd.DataFrame] = None) -> str:
    """
    Render the markdown summary of an experiment batch.

    Args:
        name: experiment name
        generator: readable generator parameters
        instances: number of generated instances
        seed: root seed of the batch
        summary: aggregated metrics, one row per rule
        truncation: isolated fraction and participation per outdegree cap
        popularity: share of instances whose Borda branching is popular
        sweep: isolated fraction and rule metrics per grid point of a parameter sweep

    Returns:
        str: The rendered markdown document
    """
    template = Template('''# Experiment {{ name }}

- Generator: {{ generator }}
- Instances: {{ instances }}{% if sweep_table %} per grid point{% endif %}
- Seed: {{ seed }}

## Rule metrics (means over all instances)

{{ summary_table }}

Columns: max_rank is the largest rank on any chosen path, max_len and avg_len the
longest and mean path length, max_sum the largest rank sum, max_weight the largest
relative voting weight of a casting voter, avg_rank the mean rank of the chosen
first edges and unpop the unpopularity margin of those edges divided by the number
of non-isolated voters. The last two are empty for non-confluent rules.
{% if popularity is not none %}
## Popularity

The Borda branching was popular in {{ popularity_pct }} of the instances.
{% endif %}{% if truncation_table %}
## Backup delegations

Isolated voters and participation when only the first d delegations are kept:

{{ truncation_table }}
{% endif %}{% if sweep_table %}
## Parameter sweep

Mean isolated fraction and rule metrics at every grid point:

{{ sweep_table }}
{% endif %}''')
    return template.render(
        name=name,
        generator=generator,
        instances=instances,
        seed=seed,
        summary_table=render_markdown_table(summary),
        popularity=popularity,
        popularity_pct=None if popularity is None else f"{float(popularity):.1%}",
        truncation_table=None if truncation is None or truncation.empty else render_markdown_table(truncation),
        sweep_table=None if sweep is None or sweep.empty else render_markdown_table(sweep),
    )

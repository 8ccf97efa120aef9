"""
Writing instances, resolutions and branchings.
"""

import json
import logging
import os
from typing import Any, Dict, List, Optional

from utils import ensure_directory
from utils.branching import Branching
from utils.errors import InvalidInstance
from utils.model import Instance
from utils.resolver import Resolution

logger = logging.getLogger(__name__)


def _has_integer_names(instance: Instance) -> bool:
    return all(name == str(v) for v, name in enumerate(instance.names))


def format_v1(instance: Instance, header: Optional[List[str]] = None) -> str:
    """
    Render an instance in the v1 text format so that reloading it gives the
    same voter ids.

    Instances named 0..n-1 (generated ones) use the ``voters:`` header and
    list only voters with edges; named instances list every voter in id
    order, with consecutive casting voters grouped on one casting line.
    """
    if instance.is_reduced:
        raise InvalidInstance("Reduced instances keep gappy ranks and have no v1 form")
    lines = [f"# {line}" for line in header or []]

    if _has_integer_names(instance) and instance.n > 0:
        lines.append(f"voters: {instance.n}")
        for v in instance.voters():
            if instance.out_edges[v]:
                lines.append(f"{v}: " + ' '.join(str(w) for w in instance.targets(v)))
        if instance.casting:
            lines.append("casting: " + ' '.join(str(c) for c in sorted(instance.casting)))
        return '\n'.join(lines) + '\n'

    pending_casting: List[str] = []
    for v in instance.voters():
        if instance.is_casting(v):
            pending_casting.append(instance.name(v))
            continue
        if pending_casting:
            lines.append("casting: " + ' '.join(pending_casting))
            pending_casting = []
        targets = ' '.join(instance.name(w) for w in instance.targets(v))
        lines.append(f"{instance.name(v)}: {targets}".rstrip())
    if pending_casting:
        lines.append("casting: " + ' '.join(pending_casting))
    return '\n'.join(lines) + '\n'


def instance_to_json_dict(instance: Instance) -> Dict[str, Any]:
    """The JSON mirror; voters without edges that are not casting appear with an empty list."""
    data: Dict[str, Any] = {}
    if _has_integer_names(instance):
        data["voters"] = instance.n
    data["delegations"] = {
        instance.name(v): [instance.name(w) for w in instance.targets(v)]
        for v in instance.voters() if not instance.is_casting(v)
    }
    data["casting"] = [instance.name(c) for c in sorted(instance.casting)]
    return data


def write_instance(instance: Instance, path: str, header: Optional[List[str]] = None) -> str:
    """
    Write the instance to ``path``; '.json' selects the JSON mirror.

    Returns:
        The absolute path written
    """
    directory = os.path.dirname(os.path.abspath(path))
    ensure_directory(directory)
    with open(path, 'w', encoding='utf-8') as f:
        if path.lower().endswith('.json'):
            json.dump(instance_to_json_dict(instance), f, indent=2)
            f.write('\n')
        else:
            f.write(format_v1(instance, header))
    logger.info(f"Wrote instance with {instance.n} voters to {path}")
    return os.path.abspath(path)


def write_text(text: str, out: Optional[str]) -> None:
    """Print to stdout, or write to ``out`` when given."""
    if out is None:
        print(text, end='' if text.endswith('\n') else '\n')
        return
    ensure_directory(os.path.dirname(os.path.abspath(out)))
    with open(out, 'w', encoding='utf-8') as f:
        f.write(text)
    logger.info(f"Wrote {out}")


def format_resolution(instance: Instance, res: Resolution) -> str:
    """One ``voter: v1 -> ... -> guru [seq: (...)]`` line per delegating voter, by voter id."""
    return ''.join(res.describe_path(instance, v) + '\n' for v in res.voters())


def resolution_to_json_dict(instance: Instance, res: Resolution) -> Dict[str, Any]:
    return {
        "rule": res.rule,
        "paths": {
            instance.name(v): {
                "path": [instance.name(u) for u in res.paths[v].voters()],
                "sequence": list(res.sequence(v)),
            }
            for v in res.voters()
        },
    }


def format_branching(instance: Instance, branching: Branching) -> str:
    """One ``voter -> target (rank r)`` line per delegating voter."""
    return ''.join(
        f"{instance.name(e.source)} -> {instance.name(e.target)} (rank {e.rank})\n"
        for e in branching.edges()
    )

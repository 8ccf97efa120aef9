"""
Loading ranked delegation instances from the v1 text format or its JSON mirror.

v1 text format:

    # comment
    voters: 12            (optional; switches to integer voter names 0..n-1)
    a: b c                (a ranks b first, c second)
    g:                    (abstainer)
    casting: i j k

Voter ids follow declaration order: voter lines and casting entries, in
file order. With a ``voters:`` header ids are the integer names themselves
and undeclared voters are abstainers.
"""

import json
import logging
import os
from typing import Dict, List, Optional, Sequence, Tuple

from utils import require_file
from utils.errors import InstanceFormatError, InvalidInstance
from utils.model import Instance
from utils.path_constants import FileKind

logger = logging.getLogger(__name__)

CASTING_KEY = "casting"
VOTERS_KEY = "voters"


def _declare(order: List[str], declared: Dict[str, int], name: str, where: str) -> None:
    if name in declared:
        raise InstanceFormatError(f"{where}: voter '{name}' declared twice")
    declared[name] = len(order)
    order.append(name)


def _build(
    declared_lists: Sequence[Tuple[str, List[str], str]],
    casting_names: Sequence[Tuple[str, str]],
    order: List[str],
    voter_count: Optional[int],
) -> Instance:
    """
    Turn parsed declarations into an Instance.

    Args:
        declared_lists: (voter name, ranked target names, location) per voter line
        casting_names: (name, location) per casting entry
        order: names in declaration order
        voter_count: the ``voters:`` header, if given
    """
    if voter_count is not None:
        for name in order:
            if not name.isdigit() or str(int(name)) != name or int(name) >= voter_count:
                raise InstanceFormatError(f"Voter '{name}' is not an integer in 0..{voter_count - 1}")
        names = [str(v) for v in range(voter_count)]
        ids = {name: v for v, name in enumerate(names)}
    else:
        names = list(order)
        ids = {name: v for v, name in enumerate(names)}

    targets: List[List[int]] = [[] for _ in names]
    for name, ranked, where in declared_lists:
        for target in ranked:
            if target not in ids:
                raise InstanceFormatError(f"{where}: target '{target}' is not a declared voter")
        targets[ids[name]] = [ids[t] for t in ranked]

    casting = [ids[name] for name, _ in casting_names]
    try:
        return Instance.from_targets(targets, casting, names)
    except InvalidInstance as exc:
        raise InstanceFormatError(str(exc)) from exc


def parse_v1(text: str, source: str = "<string>") -> Instance:
    """
    Parse the v1 text format.

    Raises:
        InstanceFormatError: malformed lines, duplicate or undeclared voters,
                             or structural violations (self-loops, repeated targets)
    """
    voter_count: Optional[int] = None
    order: List[str] = []
    declared: Dict[str, int] = {}
    declared_lists: List[Tuple[str, List[str], str]] = []
    casting_names: List[Tuple[str, str]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        where = f"{source}:{lineno}"
        if ':' not in line:
            raise InstanceFormatError(f"{where}: expected '<name>: <targets>', got '{line}'")
        head, tail = line.split(':', 1)
        head = head.strip()
        tokens = tail.split()

        if head == VOTERS_KEY:
            if voter_count is not None or len(tokens) != 1 or not tokens[0].isdigit():
                raise InstanceFormatError(f"{where}: bad voters header '{line}'")
            voter_count = int(tokens[0])
        elif head == CASTING_KEY:
            for name in tokens:
                _declare(order, declared, name, where)
                casting_names.append((name, where))
        else:
            if not head or len(head.split()) != 1:
                raise InstanceFormatError(f"{where}: bad voter name '{head}'")
            _declare(order, declared, head, where)
            declared_lists.append((head, tokens, where))

    instance = _build(declared_lists, casting_names, order, voter_count)
    logger.debug(f"Parsed {source}: {instance.n} voters, {len(instance.casting)} casting, "
                 f"{instance.edge_count} edges")
    return instance


def parse_json(text: str, source: str = "<string>") -> Instance:
    """
    JSON mirror of v1: {"voters": n (optional), "delegations": {name: [targets]},
    "casting": [names]}. Voter ids follow the delegations mapping, then the
    casting list.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"{source}: invalid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise InstanceFormatError(f"{source}: top level must be an object")
    unknown = set(data) - {VOTERS_KEY, CASTING_KEY, "delegations"}
    if unknown:
        raise InstanceFormatError(f"{source}: unknown keys {sorted(unknown)}")

    voter_count = data.get(VOTERS_KEY)
    if voter_count is not None and (not isinstance(voter_count, int) or voter_count < 0):
        raise InstanceFormatError(f"{source}: 'voters' must be a non-negative integer")

    order: List[str] = []
    declared: Dict[str, int] = {}
    declared_lists = []
    for name, ranked in data.get("delegations", {}).items():
        if not isinstance(ranked, list):
            raise InstanceFormatError(f"{source}: targets of '{name}' must be a list")
        _declare(order, declared, str(name), source)
        declared_lists.append((str(name), [str(t) for t in ranked], source))
    casting_names = []
    for name in data.get(CASTING_KEY, []):
        _declare(order, declared, str(name), source)
        casting_names.append((str(name), source))
    return _build(declared_lists, casting_names, order, voter_count)


def load_instance(filename: str) -> Instance:
    """
    Locate and parse an instance file; '.json' files use the JSON mirror.

    Raises:
        FileNotFoundError: the file is not found in any instance location
        InstanceFormatError: the file is not UTF-8 or cannot be parsed
    """
    path = require_file(filename, FileKind.INSTANCE)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except UnicodeDecodeError as exc:
        raise InstanceFormatError(f"{path}: not valid UTF-8") from exc
    source = os.path.basename(path)
    if path.lower().endswith('.json'):
        instance = parse_json(text, source)
    else:
        instance = parse_v1(text, source)
    logger.info(f"Loaded instance {source} with {instance.n} voters")
    return instance

"""
User-supplied base graphs.

Edge lists are whitespace separated, one edge per line: ``u v`` or
``u v weight``; ``#`` starts a comment. Node ids follow first appearance.
"""

import logging
from typing import List

import networkx as nx

from utils import require_file
from utils.errors import InstanceFormatError
from utils.path_constants import FileKind

logger = logging.getLogger(__name__)


def read_base_graph(filename: str, directed: bool = True) -> nx.Graph:
    """
    Read an edge list into a networkx graph; a third column becomes the
    ``weight`` edge attribute.

    Raises:
        FileNotFoundError: the file is not found
        InstanceFormatError: lines mix two and three columns, or weights are not numbers
    """
    path = require_file(filename, FileKind.BASE_GRAPH)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            lines: List[str] = [line.split('#', 1)[0].strip() for line in f]
    except UnicodeDecodeError as exc:
        raise InstanceFormatError(f"{path}: not valid UTF-8") from exc
    lines = [line for line in lines if line]

    widths = {len(line.split()) for line in lines}
    if not widths <= {2} and not widths <= {3}:
        raise InstanceFormatError(f"{filename}: every line needs the same 2 or 3 columns")
    create_using = nx.DiGraph if directed else nx.Graph
    try:
        if widths == {3}:
            graph = nx.parse_edgelist(lines, create_using=create_using, nodetype=str,
                                      data=(("weight", float),))
        else:
            graph = nx.parse_edgelist(lines, create_using=create_using, nodetype=str, data=False)
    except (TypeError, ValueError) as exc:
        raise InstanceFormatError(f"{filename}: {exc}") from exc
    graph.remove_edges_from(list(nx.selfloop_edges(graph)))
    logger.info(f"Read base graph {filename}: {graph.number_of_nodes()} nodes, "
                f"{graph.number_of_edges()} edges")
    return graph

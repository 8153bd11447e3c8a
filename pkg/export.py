import os
import json
import logging
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, Iterator, List

from orbit import OrbitGraph
from utils import format_flags, format_role

logger = logging.getLogger('klang')

DOCUMENT_FIELDS = ('mode', 'regex', 'alphabet', 'case', 'sizes', 'nodes', 'edges')


@dataclass
class OrbitDocument:
    """
    Machine-readable form of an orbit graph

    Nodes are {id, word, roles, flags, table}; table is the canonical
    automaton of the node's language. Edges are {from, op, to}.
    """
    mode: str
    regex: str
    alphabet: str
    case: str
    sizes: Dict[str, int]
    nodes: List[Dict[str, Any]] = field(default_factory=list)
    edges: List[Dict[str, Any]] = field(default_factory=list)


def _table(node) -> Dict[str, Any]:
    d = node.lang.canonical
    return {
        'start': d.start,
        'accepting': sorted(d.accepting),
        'transitions': [list(row) for row in d.transition],
    }


def build_document(graph: OrbitGraph, regex: str, case: str) -> OrbitDocument:
    """
    Build the export document for an orbit graph

    Args:
        graph: The generated orbit
        regex: The input regex text, as given
        case: The case label, e.g. "(6)"

    Returns:
        OrbitDocument: Document with dense node ids in discovery order
    """
    nodes = [
        {
            'id': node.index,
            'word': node.word,
            'roles': list(node.roles),
            'flags': node.flags,
            'table': _table(node),
        }
        for node in graph.nodes
    ]
    edges = [{'from': e.source, 'op': e.op, 'to': e.target} for e in graph.edges]
    return OrbitDocument(
        mode=graph.mode,
        regex=regex,
        alphabet=str(graph.root.alphabet),
        case=case,
        sizes=graph.summary(),
        nodes=nodes,
        edges=edges,
    )


def to_json(doc: OrbitDocument) -> str:
    """Serialize deterministically: fixed key order, two-space indent, UTF-8 operator symbols"""
    return json.dumps(asdict(doc), ensure_ascii=False, indent=2) + "\n"


def load_document(text: str) -> OrbitDocument:
    """
    Parse a JSON orbit document

    Raises:
        ValueError: Not valid JSON, or required fields are missing
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"Invalid orbit document: {e}") from e
    if not isinstance(data, dict):
        raise ValueError("Orbit document must be a JSON object")
    missing = [name for name in DOCUMENT_FIELDS if name not in data]
    if missing:
        raise ValueError(f"Orbit document is missing {', '.join(missing)}")
    doc = OrbitDocument(**{name: data[name] for name in DOCUMENT_FIELDS})
    check_document(doc)
    return doc


def check_document(doc: OrbitDocument) -> None:
    """
    Raises:
        ValueError: Ids are not dense from 0, an edge endpoint is missing, or
            the sizes disagree with the nodes
    """
    ids = [node['id'] for node in doc.nodes]
    if ids != list(range(len(ids))):
        raise ValueError("Node ids must be dense from 0")
    for edge in doc.edges:
        if not (0 <= edge['from'] < len(ids) and 0 <= edge['to'] < len(ids)):
            raise ValueError(f"Edge {edge} has a missing endpoint")
    whole = list(doc.sizes.values())[-1] if doc.sizes else None
    if whole != len(ids):
        raise ValueError(f"Sizes {doc.sizes} do not match {len(ids)} nodes")


def _escape(text: str) -> str:
    return text.replace('\\', '\\\\').replace('"', r'\"')


def _quote(text: str) -> str:
    return f'"{_escape(text)}"'


def to_dot(doc: OrbitDocument) -> Iterator[str]:
    """
    Produce a DOT digraph as an iterable of lines

    Nodes are n<id>, labelled with the role and flags; the root is drawn
    with a double border. Edge labels are the operator symbols.
    """
    yield "digraph orbit {\n"
    yield f"  label={_quote(f'{doc.mode} {doc.case} {doc.regex} over {doc.alphabet}')};\n"
    for node in doc.nodes:
        label = _escape(format_role(node['word'])) + "\\n" + format_flags(node['flags'])
        peripheries = 2 if node['id'] == 0 else 1
        yield f"  n{node['id']} [label=\"{label}\" peripheries={peripheries}];\n"
    for edge in doc.edges:
        yield f"  n{edge['from']} -> n{edge['to']} [label={_quote(edge['op'])}];\n"
    yield "}\n"


def write_document(text: str, path: str) -> None:
    """
    Write output to a file atomically

    Writes a temporary file next to the target and renames it over the
    target, so a crash never leaves a partial document.

    Raises:
        OSError: The file could not be written
    """
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    temp_file = f"{path}.tmp"
    try:
        with open(temp_file, 'w', encoding='utf-8') as f:
            f.write(text)
            f.flush()
            os.fsync(f.fileno())
        os.replace(temp_file, path)
    except OSError:
        if os.path.exists(temp_file):
            os.remove(temp_file)
        raise
    logger.info(f"Wrote {len(text)} characters to {path}")

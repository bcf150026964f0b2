"""
JSON readers and writers for graphs, explicit families, weights and reports
"""

import csv
import io
import json
import logging
import math
import os
import tempfile
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from models import ExplicitFamilySpec, Graph, Report, WeightFn
from models.errors import InputError
from utils.lattice_utils import Family
from utils.weight_utils import WeightUtils

logger = logging.getLogger(__name__)


def _reject_duplicates(pairs):
    obj = {}
    for key, value in pairs:
        if key in obj:
            raise InputError(f"duplicate key '{key}'")
        obj[key] = value
    return obj


def _reject_constant(name):
    raise InputError(f"non-finite number '{name}' is not allowed")


class FileUtils:
    """Utility class for the command-line file formats"""

    @staticmethod
    def read_json(path: str) -> Any:
        """Strict JSON load: duplicate keys, NaN and Infinity are errors"""
        try:
            with open(path, 'r', encoding='utf-8') as f:
                return json.load(f, object_pairs_hook=_reject_duplicates, parse_constant=_reject_constant)
        except InputError as e:
            raise InputError(f"{path}: {e}") from e
        except json.JSONDecodeError as e:
            raise InputError(f"{path}: malformed JSON ({e.msg} at line {e.lineno})") from e
        except OSError as e:
            raise InputError(f"{path}: cannot read file ({e.strerror})") from e

    @staticmethod
    def write_text(path: Optional[str], text: str) -> None:
        """Write ``text`` to ``path`` in one atomic replace, or to stdout when path is None"""
        if path is None:
            print(text, end='')
            return
        directory = os.path.dirname(os.path.abspath(path))
        fd, tmp = tempfile.mkstemp(dir=directory, prefix='.weightlat-', suffix='.tmp')
        try:
            with os.fdopen(fd, 'w', encoding='utf-8', newline='') as f:
                f.write(text)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.remove(tmp)
            raise
        logger.info(f"[Files] Wrote {path}")

    # ------------------------------------------------------------------
    # graphs and families
    # ------------------------------------------------------------------
    @staticmethod
    def parse_graph(path: str) -> Graph:
        """Read ``{"n": <int>, "edges": [[u, v], ...]}``"""
        data = FileUtils.read_json(path)
        if not isinstance(data, dict) or 'n' not in data:
            raise InputError(f"{path}: graph file must be an object with 'n' and 'edges'")
        extra = set(data) - {'n', 'edges'}
        if extra:
            raise InputError(f"{path}: unexpected graph key '{sorted(extra)[0]}'")
        if isinstance(data['n'], bool) or not isinstance(data['n'], int):
            raise InputError(f"{path}: 'n' must be an integer")
        for edge in data.get('edges', []):
            if not isinstance(edge, list) or any(isinstance(x, bool) or not isinstance(x, int) for x in edge):
                raise InputError(f"{path}: edge {edge!r} must be a pair of integers")
        try:
            graph = Graph(n=data['n'], edges=data.get('edges', []))
        except ValidationError as e:
            raise InputError(f"{path}: {FileUtils._first_error(e)}") from e
        logger.info(f"[Files] Loaded graph with {graph.n} vertices and {graph.edge_count} edges from {path}")
        return graph

    @staticmethod
    def write_graph(path: Optional[str], graph: Graph) -> None:
        payload = {'n': graph.n, 'edges': [list(edge) for edge in graph.edges]}
        FileUtils.write_text(path, json.dumps(payload) + '\n')

    @staticmethod
    def parse_explicit_family(path: str) -> ExplicitFamilySpec:
        """Read ``{"elements": [...], "leq": [[i, j], ...], "top": <index>}``"""
        data = FileUtils.read_json(path)
        if not isinstance(data, dict) or 'elements' not in data:
            raise InputError(f"{path}: explicit family file must be an object with 'elements'")
        try:
            return ExplicitFamilySpec(**data)
        except (ValidationError, TypeError) as e:
            detail = FileUtils._first_error(e) if isinstance(e, ValidationError) else str(e)
            raise InputError(f"{path}: {detail}") from e

    # ------------------------------------------------------------------
    # weights
    # ------------------------------------------------------------------
    @staticmethod
    def parse_weights(path: str, family: Family) -> WeightFn:
        """
        Read ``{"kind": ..., "weights": {label: value}}`` and bind it to ``family``

        Every element label must appear exactly once; values must be finite
        and non-negative numbers.
        """
        data = FileUtils.read_json(path)
        if not isinstance(data, dict) or not isinstance(data.get('weights'), dict):
            raise InputError(f"{path}: weights file must be an object with a 'weights' object")
        kind = data.get('kind')
        if kind != family.kind.value:
            raise InputError(f"{path}: weights are for a '{kind}' family, expected '{family.kind.value}'")

        mapping: Dict[str, float] = {}
        for label, value in data['weights'].items():
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise InputError(f"{path}: weight of '{label}' must be a number, got {value!r}")
            try:
                number = float(value)
            except OverflowError:
                raise InputError(f"{path}: weight of '{label}' is not representable as a float")
            if not math.isfinite(number) or number < 0:
                raise InputError(f"{path}: weight of '{label}' must be finite and >= 0, got {value!r}")
            mapping[label] = number
        try:
            w = WeightUtils.from_labels(family, mapping)
        except InputError as e:
            raise InputError(f"{path}: {e}") from e
        logger.info(f"[Files] Loaded {w.size} weights from {path}")
        return w

    @staticmethod
    def weights_text(w: WeightFn, family: Family) -> str:
        # json writes floats with repr, which reparses bit-exactly
        payload = {'kind': family.kind.value, 'weights': WeightUtils.to_labels(w, family)}
        return json.dumps(payload, indent=2) + '\n'

    @staticmethod
    def write_weights(path: Optional[str], w: WeightFn, family: Family) -> None:
        FileUtils.write_text(path, FileUtils.weights_text(w, family))

    # ------------------------------------------------------------------
    # reports
    # ------------------------------------------------------------------
    @staticmethod
    def reports_text(reports: List[Report], fmt: str = 'json', single: bool = True) -> str:
        """JSON (one object, or an array when ``single`` is False) or a CSV table"""
        if fmt == 'csv':
            buffer = io.StringIO()
            writer = csv.DictWriter(buffer, fieldnames=Report.CSV_FIELDS, lineterminator='\n')
            writer.writeheader()
            for report in reports:
                row = report.model_dump(mode='json', include=set(Report.CSV_FIELDS))
                writer.writerow({key: '' if row[key] is None else row[key] for key in Report.CSV_FIELDS})
            return buffer.getvalue()

        payload = [report.model_dump(mode='json', exclude_none=False) for report in reports]
        for item in payload:
            if item.get('timings') is None:
                item.pop('timings', None)
        if single:
            payload = payload[0]
        return json.dumps(payload, indent=2) + '\n'

    @staticmethod
    def write_reports(path: Optional[str], reports: List[Report], fmt: str = 'json', single: bool = True) -> None:
        FileUtils.write_text(path, FileUtils.reports_text(reports, fmt, single))

    @staticmethod
    def _first_error(error: ValidationError) -> str:
        first = error.errors()[0]
        where = '.'.join(str(part) for part in first.get('loc', ()))
        message = first.get('msg', str(error))
        return f"{where}: {message}" if where else message

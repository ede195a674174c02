"""JSON encoding for result documents.

Counts are Python ints of unbounded size; callers turn them into decimal
strings before encoding, since orjson refuses integers beyond 64 bits.
"""

import dataclasses
from typing import Any

import orjson

from starsym.util.logger import debug


def _default(obj: Any) -> Any:
    try:
        if isinstance(obj, frozenset | set):
            return sorted(obj)
        if hasattr(obj, "model_dump"):
            return obj.model_dump()
        if hasattr(obj, "to_dict"):
            return obj.to_dict()
        if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
            return dataclasses.asdict(obj)
        return str(obj)
    except Exception as e:
        debug("Failed to serialize {!r}: {}", type(obj).__name__, e)
        return str(obj)


def to_json(obj: Any, indent: bool = False, sort_keys: bool = True) -> bytes:
    opts = orjson.OPT_NON_STR_KEYS | orjson.OPT_PASSTHROUGH_DATACLASS
    if indent:
        opts |= orjson.OPT_INDENT_2
    if sort_keys:
        opts |= orjson.OPT_SORT_KEYS
    return orjson.dumps(obj, default=_default, option=opts)


def from_json(data: str | bytes) -> Any:
    return orjson.loads(data)

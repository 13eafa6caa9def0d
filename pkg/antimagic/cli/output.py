import json
import sys
from fractions import Fraction
from typing import List, TextIO, Union

import numpy as np
import pandas as pds

FORMATS = ('json', 'csv', 'text')

Records = Union[dict, List[dict]]


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def to_json(records: Records) -> str:
    return json.dumps(records, indent=2, default=_jsonable)


def to_frame(records: Records) -> pds.DataFrame:
    """Flattens one record or a list of records, nested keys become ``parent.child`` columns."""
    if isinstance(records, dict):
        records = [records]
    return pds.json_normalize(json.loads(to_json(records)))


def emit(records: Records, fmt: str = 'json', stream: TextIO or None = None, frame: pds.DataFrame or None = None):
    """Writes records as JSON, CSV or a human readable table.

    Parameters
    ----------
    records: dict or List[dict]
        the machine readable output
    fmt: str
        one of json, csv, text
    stream: TextIO, optional
        defaults to sys.stdout
    frame: pds.DataFrame, optional
        tabular view used for csv and text instead of the flattened records
    """
    stream = stream or sys.stdout
    if fmt == 'json':
        stream.write(to_json(records) + "\n")
        return
    if fmt not in FORMATS:
        raise ValueError(f"unknown output format '{fmt}', expected one of {FORMATS}")
    frame = frame if frame is not None else to_frame(records)
    if fmt == 'csv':
        frame.to_csv(stream, index=False)
    else:
        stream.write(frame.to_string(index=False) + "\n")

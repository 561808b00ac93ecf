# -*- coding: utf-8 -*-
import os
import tempfile
from approachabilitykit.foundation.constants import *
from approachabilitykit.foundation.exceptions import RecordFormatError
from approachabilitykit.foundation.utils import *
from approachabilitykit.calculator.record import RunRecord


"""
This code is responsible for the "run record" document: the trajectory
metrics of one simulation written as CSV. Metadata comes first as comment
lines ``# key=value`` in a fixed order, followed by the header row and one
row per checkpoint. Floats are printed with 17 significant digits so that a
parsed record compares equal to the emitted one.
"""


RECORD_METADATA_KEYS = ('scenario', 'strategy', 'adversary', 'seed', 'horizon')


def emit_record(record):
    """
    Function will return the CSV text of the record.
    """
    lines = ['%s%s=%s' % (METADATA_PREFIX, key, value) for key, value in record.metadata()]
    lines.append(','.join(record.columns))
    for row in record.rows:
        lines.append(','.join(['%d' % row[0]] + [format_float(value) for value in row[1:]]))
    return '\n'.join(lines) + '\n'


def parse_record(text):
    metadata = {}
    header = None
    rows = []
    for number, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        if line.startswith(METADATA_PREFIX) and header is None:
            key, separator, value = line[len(METADATA_PREFIX):].partition('=')
            if not separator:
                raise RecordFormatError('line %d: metadata needs key=value: %r' % (number, line))
            metadata[key.strip()] = value.strip()
            continue
        fields = line.split(',')
        if header is None:
            header = fields
            continue
        if len(fields) != len(header):
            raise RecordFormatError('line %d: %d values for %d columns' % (number, len(fields), len(header)))
        try:
            rows.append([int(fields[0])] + [float(value) for value in fields[1:]])
        except ValueError:
            raise RecordFormatError('line %d: malformed number in %r' % (number, line))
    if header is None:
        raise RecordFormatError('record has no header row')
    for key in RECORD_METADATA_KEYS:
        if key not in metadata:
            raise RecordFormatError('record metadata misses %r' % key)
    extra = {key: value for key, value in metadata.items() if key not in RECORD_METADATA_KEYS}
    record = RunRecord(metadata['scenario'], metadata['strategy'], metadata['adversary'],
                       int(metadata['seed']), int(metadata['horizon']), header, extra=extra)
    for row in rows:
        record.add_row(row)
    return record


def write_atomic(filepath, text):
    """
    Write ``text`` next to ``filepath`` and move it into place.
    """
    directory = os.path.dirname(os.path.abspath(filepath))
    os.makedirs(directory, exist_ok=True)
    handle, temporary = tempfile.mkstemp(dir=directory, prefix='.tmp-', suffix='.csv')
    try:
        with os.fdopen(handle, 'w', newline='') as output_file_handle:
            output_file_handle.write(text)
        os.replace(temporary, filepath)
    except BaseException:
        if os.path.exists(temporary):
            os.remove(temporary)
        raise


def read_record(filepath):
    with open(filepath) as input_file_handle:
        return parse_record(input_file_handle.read())

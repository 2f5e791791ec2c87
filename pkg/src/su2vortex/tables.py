"""Plain-text table dumps for plot data.

CSV files start with ``#``-prefixed header lines (command and full config as
JSON), then a column-name line, then rows. Floats are written with ``repr`` so
that parsing gives back identical doubles. The JSON variant stores the same
payload under ``config``, ``columns`` and ``rows``.
"""
import csv
import io
import json
import sys


def _cell(v):
    if isinstance(v, bool):
        return str(int(v))
    if isinstance(v, float):
        return repr(v)
    return str(v)


def write_table(path, config, columns, rows, fmt="csv"):
    """Write ``rows`` to ``path`` (``"-"`` for stdout)."""
    if fmt == "csv":
        buf = io.StringIO()
        buf.write(f"# su2vortex {config.get('command', '')}\n")
        buf.write("# config: " + json.dumps(config, sort_keys=True) + "\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell(v) for v in row])
        text = buf.getvalue()
    elif fmt == "json":
        text = json.dumps({"config": config, "columns": list(columns),
                           "rows": [list(r) for r in rows]}) + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _parse(cell):
    try:
        return int(cell)
    except ValueError:
        return float(cell)


def read_table(path):
    """Read a dump written by ``write_table``; returns ``(config, columns, rows)``."""
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        payload = json.loads(text)
        return payload["config"], payload["columns"], payload["rows"]
    config, body = {}, []
    for line in text.splitlines():
        if line.startswith("# config: "):
            config = json.loads(line[len("# config: "):])
        elif not line.startswith("#") and line:
            body.append(line)
    reader = csv.reader(body)
    columns = next(reader)
    rows = [[_parse(c) for c in r] for r in reader]
    return config, columns, rows


# -*- coding: utf-8 -*-
"""
The in-memory run record the simulation loop fills; reading and writing it
as CSV lives in the harness.
"""

from approachabilitykit.foundation.exceptions import RecordFormatError


class RunRecord:
    """
    Checkpoint rows of one run. ``columns`` starts with 't'; every row holds
    the integer round followed by floats. ``extra`` holds further metadata
    written after the fixed keys; ``wall_clock`` is never written to the CSV.
    """

    def __init__(self, scenario_id, strategy_id, adversary_id, seed, horizon, columns, rows=None, extra=None):
        assert isinstance(seed, int), 'seed is not a Integer class: %r' % seed
        assert isinstance(horizon, int), 'horizon is not a Integer class: %r' % horizon
        if not columns or columns[0] != 't':
            raise RecordFormatError('the first column must be "t", got %r' % (columns,))
        self.scenario_id = scenario_id
        self.strategy_id = strategy_id
        self.adversary_id = adversary_id
        self.seed = seed
        self.horizon = horizon
        self.columns = list(columns)
        self.rows = [] if rows is None else [list(row) for row in rows]
        self.extra = {} if extra is None else dict(extra)
        self.wall_clock = None

    def add_row(self, row):
        if len(row) != len(self.columns):
            raise RecordFormatError('row has %d values for %d columns' % (len(row), len(self.columns)))
        if self.rows and row[0] <= self.rows[-1][0]:
            raise RecordFormatError('checkpoint rounds must increase: %r after %r' % (row[0], self.rows[-1][0]))
        self.rows.append([int(row[0])] + [float(value) for value in row[1:]])

    def column(self, name):
        try:
            index = self.columns.index(name)
        except ValueError:
            raise RecordFormatError('record has no column %r' % name)
        return [row[index] for row in self.rows]

    def last(self, name):
        values = self.column(name)
        return values[-1] if values else None

    def metadata(self):
        fields = [
            ('scenario', self.scenario_id),
            ('strategy', self.strategy_id),
            ('adversary', self.adversary_id),
            ('seed', str(self.seed)),
            ('horizon', str(self.horizon))
        ]
        fields += [(key, str(self.extra[key])) for key in sorted(self.extra)]
        return fields

    def __eq__(self, other):
        return (isinstance(other, RunRecord) and self.metadata() == other.metadata()
                and self.columns == other.columns and self.rows == other.rows)

    __hash__ = None

    def __repr__(self):
        return 'RunRecord(%s, %s, %s, seed=%d, T=%d, %d rows)' % (self.scenario_id, self.strategy_id, self.adversary_id,
                                                                 self.seed, self.horizon, len(self.rows))

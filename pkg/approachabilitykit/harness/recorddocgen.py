# -*- coding: utf-8 -*-
import os
import logging
from approachabilitykit.foundation.constants import *
from approachabilitykit.foundation.exceptions import *
from approachabilitykit.foundation.utils import *
from approachabilitykit.harness.recordfileformat import *


logger = logging.getLogger(__name__)


class RecordDocGen:
    """
    Class will take the outcome of experiments and write the documents
    of the harness. The following documents are available: summary (the CSV
    run record plus its one-page summary) and report (rate fits over many
    records).
    """

    #--------------------------------------------------------------------------#
    #                     P U B L I C  F U N C T I O N S                       #
    #--------------------------------------------------------------------------#

    def __init__(self, doc_id=SUMMARY_DOCUMENT_ID):
        self.set_doc_id(doc_id)
        self._doc_content = None

    def set_doc_id(self, doc_id):
        assert doc_id in (SUMMARY_DOCUMENT_ID, REPORT_DOCUMENT_ID), 'Supported documents are "summary" and "report".'
        self._doc_id = doc_id

    def set_doc_content(self, doc_content):
        assert doc_content['id'] == self._doc_id, 'document content is for %r, not %r' % (doc_content['id'], self._doc_id)
        self._doc_content = doc_content

    def generate(self, filepath):
        """
        Write the CSV document to ``filepath`` and the plain-text document
        next to it (same name, ``.txt`` extension). Returns both paths.
        """
        if self._doc_content is None:
            raise RecordFormatError('no document content set')

        # Load up the document from the file.
        self.init_text_content()

        # Set our variables.
        self.update_text_content()

        write_atomic(filepath, self._csv_content)
        text_filepath = os.path.splitext(filepath)[0] + '.txt'
        write_atomic(text_filepath, self._text_content)
        logger.info('wrote %s and %s', filepath, text_filepath)
        return filepath, text_filepath

    #--------------------------------------------------------------------------#
    #                     P R I V A T E  F U N C T I O N S                     #
    #--------------------------------------------------------------------------#

    def init_text_content(self):
        # Get the filepath of where THIS file is located and attach to the
        # filepath the document name.
        THIS_DIR = os.path.dirname(os.path.abspath(__file__))
        filepath = THIS_DIR + "/text_document/" + self._doc_id + ".txt"

        with open(filepath) as input_file_handle:
            self._text_content = input_file_handle.read()

    def update_text_content(self):
        """
        Function will go through the document text and replace all the
        placeholders with the experiment content.
        """
        if self._doc_id == SUMMARY_DOCUMENT_ID:
            record = self._doc_content['record']
            self._csv_content = emit_record(record)
            placeholders = summary_placeholders(record, self._doc_content)
        else:
            self._csv_content = report_csv(self._doc_content['fits'])
            placeholders = {
                '{{record_count}}': str(len(set(name for name, column, fit in self._doc_content['fits']))),
                '{{t_min}}': str(self._doc_content.get('t_min', RATE_FIT_T_MIN)),
                '{{rate_fits}}': format_fits(self._doc_content['fits'])
            }
        self._text_content = replace_all(self._text_content, placeholders)


def summary_placeholders(record, doc_content):
    final = record.rows[-1] if record.rows else []
    final_values = '\n'.join('%-20s %s' % (name, value) for name, value in zip(record.columns, final))
    if 'gap' in record.columns and record.rows:
        gaps = record.column('gap')
        bounds = record.column('bound')
        violations = sum(1 for gap, bound in zip(gaps, bounds) if gap > bound)
        certificate = 'max gap/bound ratio %.6g, violations %d of %d checkpoints' % (
            max(gap / bound for gap, bound in zip(gaps, bounds)), violations, len(gaps))
    else:
        certificate = 'not available for strategy %s' % record.strategy_id
    wall_clock = doc_content.get('wall_clock')
    return {
        '{{scenario}}': record.scenario_id,
        '{{strategy}}': record.strategy_id,
        '{{adversary}}': record.adversary_id,
        '{{seed}}': str(record.seed),
        '{{horizon}}': str(record.horizon),
        '{{checkpoints}}': str(len(record.rows)),
        '{{body_norm}}': str(record.extra.get('body_norm', '')),
        '{{wall_clock}}': '%.3f' % wall_clock if wall_clock is not None else 'n/a',
        '{{record_file}}': doc_content.get('record_file', ''),
        '{{final_values}}': final_values,
        '{{certificate}}': certificate,
        '{{t_min}}': str(doc_content.get('t_min', RATE_FIT_T_MIN)),
        '{{rate_fits}}': format_fits(doc_content.get('fits', []))
    }


def format_fits(fits):
    if not fits:
        return 'none'
    lines = []
    for name, column, fit in fits:
        if fit is None:
            lines.append('%-28s %-24s too few checkpoints' % (name, column))
        elif fit.converged:
            lines.append('%-28s %-24s converged-to-zero' % (name, column))
        else:
            lines.append('%-28s %-24s slope %+.4f  r2 %.4f' % (name, column, fit.slope, fit.r_squared))
    return '\n'.join(lines)


def report_csv(fits):
    lines = ['record,column,status,slope,intercept,r_squared,points']
    for name, column, fit in fits:
        if fit is None:
            lines.append('%s,%s,insufficient,,,,0' % (name, column))
        elif fit.converged:
            lines.append('%s,%s,converged-to-zero,,,,%d' % (name, column, fit.points))
        else:
            lines.append('%s,%s,fit,%s,%s,%s,%d' % (name, column, format_float(fit.slope), format_float(fit.intercept),
                                                     format_float(fit.r_squared), fit.points))
    return '\n'.join(lines) + '\n'

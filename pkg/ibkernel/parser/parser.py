# -*- coding: utf-8 -*-
"""
parser.py - Base class for input file parsers.
"""
import contextlib
import io
import os

from ibkernel.exceptions import MarkerFormatException


class InputParser(object):
    """
    This class is intended to define a base class to be inherited by actual
    parser classes.

    A stream source is read once on first use and its content kept, so that a
    document can be validated then parsed, or parsed several times.
    """

    def __init__(self, source, filename=None):
        """
        :param source: Path of the file, or file-like object.
        :param filename: Name used in log messages.
        """
        self.source = source
        self._content = None

        if not filename and isinstance(self.source, str):
            self.filename = os.path.basename(self.source)
        else:
            self.filename = filename

    @contextlib.contextmanager
    def open_source(self):
        """
        Open the document for reading, from its start.

        :return: Context manager yielding a text stream.
        """
        if hasattr(self.source, "read"):
            if self._content is None:
                self._content = self.source.read()
            yield io.StringIO(self._content)
        else:
            with io.open(self.source, 'r', encoding='utf-8') as input_file:
                yield input_file

    def validate_document(self):
        """
        Validate the document source.

        :return: None if the document is correct, the list of problems
                 otherwise.
        """
        try:
            self.parse_document()
        except MarkerFormatException as exc:
            return [str(exc)]
        return None

    def parse_document(self):
        """
        Actual parsing of the document specified in constructor.
        """
        raise NotImplementedError()

# coding=utf-8
"""Machine-readable output shared by every heron-quad command."""
import csv
import io
import json
from fractions import Fraction

from importlib.metadata import version, PackageNotFoundError

from .exactnum import rational_to_str


def package_version():
    """Get the installed version of heron-quad or 'unknown' when running from source."""
    try:
        return version('heron-quad')
    except PackageNotFoundError:
        return 'unknown'


def csv_value(value):
    """Serialize one CSV cell without losing precision."""
    if value is None:
        return ''
    if isinstance(value, Fraction):
        return rational_to_str(value)
    return str(value)


def rows_to_csv(columns, rows):
    """Get CSV text with a header row of columns followed by the rows."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow([csv_value(v) for v in row])
    return buffer.getvalue()


def csv_to_rows(text):
    """Get the (columns, rows) written by rows_to_csv with exact cells as Rationals.

    Empty cells come back as None.
    """
    reader = csv.reader(io.StringIO(text))
    columns = next(reader)
    rows = [[Fraction(cell) if cell else None for cell in row] for row in reader]
    return columns, rows


class OutputEnvelope(object):
    """The JSON document written by a heron-quad command.

    Args:
        command: Name of the command that produced the output.
        inputs: Dictionary echoing the parsed inputs of the command.
        result: The command-specific payload.
        errata: Optional list of errata noted while producing the result.
            (Default: None).
        version: Optional version string. If None, the installed package
            version is used. (Default: None).

    Properties:
        * command
        * inputs
        * result
        * errata
        * version
    """
    __slots__ = ('_command', '_inputs', '_result', '_errata', '_version')

    def __init__(self, command, inputs, result, errata=None, version=None):
        assert isinstance(command, str), 'Expected string command. Got {}.'.format(
            type(command))
        assert isinstance(inputs, dict), 'Expected dictionary of inputs. Got {}.'.format(
            type(inputs))
        self._command = command
        self._inputs = inputs
        self._result = result
        self._errata = list(errata) if errata else []
        self._version = version if version is not None else package_version()

    @classmethod
    def from_dict(cls, data):
        """Create an OutputEnvelope from a dictionary."""
        missing = [f for f in ('command', 'inputs', 'result') if f not in data]
        if missing:
            raise ValueError('Output envelope is missing {}.'.format(', '.join(missing)))
        return cls(data['command'], data['inputs'], data['result'],
                   data.get('errata'), data.get('version'))

    @classmethod
    def from_json(cls, text):
        """Create an OutputEnvelope from JSON text."""
        return cls.from_dict(json.loads(text))

    @property
    def command(self):
        """Get the name of the command."""
        return self._command

    @property
    def inputs(self):
        """Get the dictionary of parsed inputs."""
        return self._inputs

    @property
    def result(self):
        """Get the command payload."""
        return self._result

    @property
    def errata(self):
        """Get the list of errata."""
        return self._errata

    @property
    def version(self):
        """Get the version string of the package that wrote this envelope."""
        return self._version

    def to_dict(self):
        """Get OutputEnvelope as a dictionary with keys in a fixed order."""
        return {
            'command': self._command,
            'inputs': self._inputs,
            'result': self._result,
            'errata': self._errata,
            'version': self._version
        }

    def to_json(self, indent=2):
        """Get OutputEnvelope as JSON text."""
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'OutputEnvelope: {} ({} errata)'.format(self._command, len(self._errata))

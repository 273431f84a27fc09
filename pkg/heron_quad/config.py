# coding=utf-8
"""heron-quad configurations.

Import this into every module where access to tolerances is needed.

Usage:

.. code-block:: python

    from heron_quad.config import tolerances
    print(tolerances.zero_tolerance)
    tolerances.zero_tolerance = 1e-10
"""
import os
import json


class Tolerances(object):
    """Numerical tolerances and display settings used by heron-quad.

    Only the float code paths consult the tolerances. Everything computed with
    exact rationals is decided exactly.

    Args:
        config_file: The path to the config.json file from which tolerances are
            loaded. If None, the config.json included in this package will be
            used. (Default: None).

    Properties:
        * zero_tolerance
        * merge_tolerance
        * pythagorean_tolerance
        * decimal_digits
        * angle_decimals
        * config_file
    """
    __slots__ = ('_zero_tolerance', '_merge_tolerance', '_pythagorean_tolerance',
                 '_decimal_digits', '_angle_decimals', '_config_file')

    def __init__(self, config_file=None):
        self.config_file = config_file

    @property
    def zero_tolerance(self):
        """Get or set the relative tolerance under which a float is treated as zero.

        This decides the beta + gamma = 0 branch and the sign of the discriminant
        when the equation coefficients are floats.
        """
        return self._zero_tolerance

    @zero_tolerance.setter
    def zero_tolerance(self, value):
        self._zero_tolerance = self._check_positive(value, 'zero_tolerance')

    @property
    def merge_tolerance(self):
        """Get or set the distance under which two enumerated solutions are merged."""
        return self._merge_tolerance

    @merge_tolerance.setter
    def merge_tolerance(self, value):
        self._merge_tolerance = self._check_positive(value, 'merge_tolerance')

    @property
    def pythagorean_tolerance(self):
        """Get or set the relative tolerance of the float alpha^2 + beta^2 = gamma^2 test.
        """
        return self._pythagorean_tolerance

    @pythagorean_tolerance.setter
    def pythagorean_tolerance(self, value):
        self._pythagorean_tolerance = \
            self._check_positive(value, 'pythagorean_tolerance')

    @property
    def decimal_digits(self):
        """Get or set the significant digits of decimal approximations in outputs."""
        return self._decimal_digits

    @decimal_digits.setter
    def decimal_digits(self, value):
        self._decimal_digits = self._check_count(value, 'decimal_digits')

    @property
    def angle_decimals(self):
        """Get or set the number of decimals used when displaying angles in degrees."""
        return self._angle_decimals

    @angle_decimals.setter
    def angle_decimals(self, value):
        self._angle_decimals = self._check_count(value, 'angle_decimals')

    @property
    def config_file(self):
        """Get or set the path to the config.json file from which tolerances load.

        Setting this property reloads every tolerance from the file.
        """
        return self._config_file

    @config_file.setter
    def config_file(self, cfg):
        if cfg is None:
            cfg = os.path.join(os.path.dirname(__file__), 'config.json')
        self._load_from_file(cfg)
        self._config_file = cfg

    def _load_from_file(self, file_path):
        """Set all of the properties of this object from a config JSON file.

        Args:
            file_path: Path to a JSON file containing the tolerances. A sample of
                this JSON is the config.json file within this package. Keys
                missing from the file keep the package defaults.
        """
        assert os.path.isfile(str(file_path)), \
            'No config file found at {}'.format(file_path)
        with open(file_path, 'r') as cfg:
            data = json.load(cfg)
        self.zero_tolerance = data.get('zero_tolerance', 1e-12)
        self.merge_tolerance = data.get('merge_tolerance', 1e-12)
        self.pythagorean_tolerance = data.get('pythagorean_tolerance', 1e-9)
        self.decimal_digits = data.get('decimal_digits', 10)
        self.angle_decimals = data.get('angle_decimals', 5)

    @staticmethod
    def _check_positive(value, name):
        try:
            value = float(value)
        except (TypeError, ValueError):
            raise TypeError('Expected number for {}. Got {}.'.format(name, type(value)))
        assert value > 0, '{} must be greater than zero. Got {}.'.format(name, value)
        return value

    @staticmethod
    def _check_count(value, name):
        try:
            value = int(value)
        except (TypeError, ValueError):
            raise TypeError('Expected integer for {}. Got {}.'.format(name, type(value)))
        assert value >= 0, '{} must be zero or greater. Got {}.'.format(name, value)
        return value

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'heron-quad Tolerances: {}'.format(self.config_file)


tolerances = Tolerances()

"""heron-quad library."""
from honeybee.logutil import get_logger


logger = get_logger(__name__, filename='heron-quad.log')

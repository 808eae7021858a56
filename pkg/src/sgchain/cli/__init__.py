"""Command-line front end: instance documents, reports and verification suites."""

from .instances import InstanceSpec, Kind, build, parse_instance, print_instance, same_instance
from .zoo import ZOO_NAMES, zoo_instance, zoo_spec

__all__ = [
    "InstanceSpec", "Kind", "build", "parse_instance", "print_instance", "same_instance",
    "ZOO_NAMES", "zoo_instance", "zoo_spec",
]

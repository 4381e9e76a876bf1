"""Groups acting on regular trees with almost prescribed local action, their
embedding into semi-restricted wreath products, and the lamplighter-type graphs
they act on, all at finite truncation."""

from .elements import (
    Element,
    Generator,
    Instance,
    Portrait,
    compose,
    generators,
    icc_conjugates,
    make_instance,
    make_portrait,
    reference_instance,
)
from .permgrp import PermutationGroup, from_images

__version__ = "0.1.0"

"""
:module AbstractBaseClass: Module hosting the AbstractBaseClass shared by the
calculators, data classes, formats and parameters of cantorkit.
"""

from abc import ABCMeta, abstractmethod


class AbstractBaseClass(object, metaclass=ABCMeta):
    """
    :class AbstractBaseClass: Base class of cantorkit's extensible objects
    """

    @abstractmethod
    def __init__(self):
        pass

"""Base error and the logging mixin shared by the stateful classes."""

import logging

from ratfert import templates

class RatfertError(ValueError):
    """Base class for errors raised on invalid words, shadows and link classes."""


class Logging(object):
    """Instance naming and per-class loggers.

    Subclasses keep a class level ``count`` of created instances.
    """

    logging_levels = ['DEBUG','INFO','WARNING']

    def register_instance(self,identifier='',verbosity='INFO'):
        """Count, name and attach a logger to a new instance."""

        cls = type(self)
        cls.count = cls.count + 1
        self.name_instance(identifier)
        self.initialize_logger(verbosity)

    def name_instance(self,identifier=''):
        """Name the instance from its class prefix and number, e.g. catalog_2."""

        self.ID = type(self).count
        class_name = type(self).__name__

        if class_name not in templates.instance_prefix:
            raise ValueError('{} has no instance prefix!'.format(class_name))

        self.name = '{}_{}'.format(templates.instance_prefix[class_name],self.ID)
        if identifier:
            self.name = '{}-{}'.format(identifier,self.name)

    def initialize_logger(self,logging_level):
        """Use one logger per class."""

        self.logger = logging.getLogger(type(self).__name__)
        self.verbosity = logging_level

    @property
    def verbosity(self):
        return self.__verbosity

    @verbosity.setter
    def verbosity(self,verbosity):
        assert verbosity in self.logging_levels, '{} is not a valid logging level!'.format(verbosity)

        self.__verbosity = verbosity
        self.logger.setLevel(getattr(logging,verbosity))
        self.logger.debug('{}:Logging level:{}'.format(self.name,verbosity))

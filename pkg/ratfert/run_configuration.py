"""Named run configurations with parent_config inheritance."""

import os
import logging

from ratfert import defaults,specifications,templates
from ratfert.utility_classes import Logging
from ratfert.utility_functions import read_json

logger = logging.getLogger(__name__)

class RunConfiguration(Logging):
    """Resolved settings for a command or verification run.

    A value is taken from the keyword arguments if given, then from the
    configuration with the requested ID, then from its parent configuration,
    and finally from `defaults`.
    """

    count = 0 #Object count

    def __init__(self,configFile=None,configId=defaults.CONFIG_ID,verbosity=None,identifier='',**kwargs):
        """Creates an instance of `RunConfiguration`.

        Args:
          configFile (str): JSON file with named configurations (optional).
          configId (str): Configuration to use from the file.
          verbosity (str): Logging level, overriding the configuration file if given.
          **kwargs: Values overriding the configuration file.
        """

        self.register_instance(identifier,verbosity or defaults.LOGGING_LEVEL)

        self.config_file = configFile
        self.config_id = configId

        config = self.get_config(configFile,configId) if configFile is not None else {}
        parent_config = self.get_parent_config(configFile,config)

        kwargs['verbosity'] = verbosity
        self.settings = self.resolve_settings(config,parent_config,kwargs)
        self.verbosity = self.settings['verbosity']
        self.logger.debug('{}:Resolved settings:{}'.format(self.name,self.settings))

    def read_config(self,configFile):
        """Read all run configurations from a JSON file."""

        self.logger.debug('{}:Reading configuration file:{}'.format(self.name,configFile))

        return read_json(configFile)

    def get_config(self,configFile,configId):
        """Check configuration ID in config file."""

        config_dict = self.read_config(configFile)

        available_ids = sorted(config_dict)
        if configId not in available_ids:
            raise KeyError('Run configuration with ID:{} could not be found in {}! - Available IDs are:{}'.format(configId,configFile,available_ids))

        return config_dict[configId]

    def get_parent_config(self,configFile,config):
        """Parent configuration, empty if there is none."""

        parent_id = config.get('parent_config','')
        if parent_id:
            self.logger.info('{}:Reading parent config:{} for config:{}'.format(self.name,parent_id,self.config_id))
            return self.get_config(configFile,parent_id)

        return {}

    def resolve_settings(self,config,parent_config,arguments):
        """Resolve every setting from arguments, config, parent config and defaults."""

        settings = {}
        for key,default_name in templates.run_configuration_template.items():
            if arguments.get(key) is not None:
                value = arguments[key]
            elif key in config:
                value = config[key]
            elif key in parent_config:
                value = parent_config[key]
            else:
                value = getattr(defaults,default_name)
            settings[key] = self.check_setting(key,value)

        unused = set(arguments).difference(settings)
        if unused:
            self.logger.warning('{}:Ignored arguments:{}'.format(self.name,sorted(unused)))

        return settings

    def check_setting(self,key,value):
        """Type and range check a single setting."""

        spec = specifications.run_argument_spec[key]
        valid_type = spec['type']

        if value is None or not isinstance(value,valid_type) or (valid_type is int and isinstance(value,bool)):
            raise ValueError('{}:Found {} to have type:{} - Valid type:{}'.format(self.name,key,type(value),valid_type))

        if key in specifications.run_argument_bounds:
            lower,upper = specifications.run_argument_bounds[key]
            if not lower <= value <= upper:
                raise ValueError('{}:{}={} is outside [{},{}]!'.format(self.name,key,value,lower,upper))

        if key in specifications.run_argument_choices and value not in specifications.run_argument_choices[key]:
            raise ValueError('{}:{}={} is not one of {}!'.format(self.name,key,value,specifications.run_argument_choices[key]))

        if key in ('catalog','families') and not os.path.isfile(value):
            raise ValueError('{}:{} file {} does not exist!'.format(self.name,key,value))

        return value

    def __getitem__(self,key):
        return self.settings[key]

    def __getattr__(self,key):
        settings = self.__dict__.get('settings',{})
        if key in settings:
            return settings[key]
        raise AttributeError(key)

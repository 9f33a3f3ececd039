"""Store configuration options."""

import os

#Logging
LOGGING_LEVEL = 'INFO'

#Data files shipped with the package
DATA_FOLDER = os.path.join(os.path.dirname(os.path.abspath(__file__)),'data')
CATALOG_FILE = os.path.join(DATA_FOLDER,'catalog.csv')
FAMILIES_FILE = os.path.join(DATA_FOLDER,'families.csv')

#Resultant options
BRUTE_FORCE_CROSSING_LIMIT = 20 #2**20 sign assignments
MIRROR_IDENTIFIED = True

#Fertility options
LOCAL_FERTILITY_MAXIMUM = {1:7,2:6} #Largest fertility number by component count
MINIMUM_TARGET_CROSSING = {1:3,2:2} #Smallest nontrivial knot / two-component link
RATIONAL_FERTILITY_MAX_CROSSING = 12
GENERATOR_MAX_CROSSING = 16

#Fertile candidates are searched up to one crossing above the local maximum
FERTILE_SEARCH_CROSSING = {1:9,2:8}

#Property sweeps
RANDOM_SEED = 1729
PROPERTY_SAMPLE_SIZE = 200
RUN_SLOW_CHECKS = False
SLOW_SWEEP_LENGTH = 9 #Trunk length for the slow local fertility sweep
REWRITE_SAMPLE_SIZE = 100000
ORACLE_RANDOM_MAX_CROSSING = 14
ORACLE_CATALOG_MAX_CROSSING = 12

#Run configurations
CONFIG_FILE = 'config_fertility.json'
CONFIG_ID = 'default'

"""Templates for instance names, output records and run configurations."""

#Prefix used by Logging.name_instance for each stateful class
instance_prefix = {'Catalog':'catalog',
                   'FertilityAnalyzer':'fertility',
                   'Verification':'verify',
                   'RunConfiguration':'config'}

#Field order of the JSON objects printed by the command line tool
classify_record = ['p','q','components','crossing','name']

normalize_record = ['word','p','q','components','crossing','name','steps','trace']

resultant_record = ['p','q','components','crossing','name','count','probability']

fertility_record = ['word','name','components','crossing','fertility','fertile']

#Keys of a run configuration and the defaults they fall back to (see defaults.py)
run_configuration_template = {'verbosity':'LOGGING_LEVEL',
                              'max_crossing':'RATIONAL_FERTILITY_MAX_CROSSING',
                              'brute_force_limit':'BRUTE_FORCE_CROSSING_LIMIT',
                              'mirror_identified':'MIRROR_IDENTIFIED',
                              'sample_size':'PROPERTY_SAMPLE_SIZE',
                              'rewrite_sample_size':'REWRITE_SAMPLE_SIZE',
                              'random_seed':'RANDOM_SEED',
                              'slow':'RUN_SLOW_CHECKS',
                              'catalog':'CATALOG_FILE',
                              'families':'FAMILIES_FILE'}

rational_fertility_record = ['word','name','components','crossing','max_crossing','rational_fertility']

trunk_record = ['word','p','q','components','crossing','name']

g_record = ['length','components','g']

count_record = ['query','formula_value','enumerated_value','agree']

local_record = ['word','source','fertility','status']

verification_record = ['name','status','detail','seconds']

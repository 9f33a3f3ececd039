"""Argument specifications used to type-check run configurations."""

import six

string_type = six.string_types

run_argument_spec = {'verbosity':{'default_value':'INFO','type':string_type},
                     'max_crossing':{'default_value':12,'type':int},
                     'brute_force_limit':{'default_value':20,'type':int},
                     'mirror_identified':{'default_value':True,'type':bool},
                     'sample_size':{'default_value':200,'type':int},
                     'rewrite_sample_size':{'default_value':100000,'type':int},
                     'random_seed':{'default_value':1729,'type':int},
                     'slow':{'default_value':False,'type':bool},
                     'catalog':{'default_value':None,'type':string_type},
                     'families':{'default_value':None,'type':string_type}}

#Bounds checked after the type check
run_argument_bounds = {'max_crossing':(2,16),
                       'brute_force_limit':(1,24),
                       'sample_size':(1,100000),
                       'rewrite_sample_size':(1,10000000)}

#Allowed values checked after the type check
run_argument_choices = {'verbosity':['DEBUG','INFO','WARNING']}

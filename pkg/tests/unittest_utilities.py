"""Common utility functions used in unit tests."""

import os
import io
import json

import numpy as np

from ratfert import defaults
from ratfert.cli import run

config_file = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))),'config_fertility.json')

def random_assigned_words(count,max_length=6,max_entry=5,seed=defaults.RANDOM_SEED):
    """Random words with entries of any sign, zeros included."""

    rng = np.random.default_rng(seed)
    words = []
    for _ in range(count):
        length = int(rng.integers(1,max_length + 1))
        words.append([int(c) for c in rng.integers(-max_entry,max_entry + 1,size=length)])

    return words

def random_shadows(count,max_crossing=10,max_length=5,seed=defaults.RANDOM_SEED):
    """Random shadows with entry sum at most max_crossing."""

    rng = np.random.default_rng(seed)
    shadows = []
    while len(shadows) < count:
        length = int(rng.integers(1,max_length + 1))
        shadow = [int(a) for a in rng.integers(1,5,size=length)]
        if sum(shadow) <= max_crossing:
            shadows.append(shadow)

    return shadows

def run_cli(*argv):
    """Run the command line tool and return (exit code, output text)."""

    stdout = io.StringIO()
    stderr = io.StringIO()
    code = run(list(argv),stdout=stdout,stderr=stderr)

    return code,stdout.getvalue()

def run_cli_json(*argv):
    """Run the command line tool with JSON output and return (exit code, decoded output)."""

    code,text = run_cli(*(list(argv) + ['--format','json']))

    return code,json.loads(text) if text else None

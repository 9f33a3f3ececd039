"""Commonly used helpers for counting, file input and output."""

import sys
import csv
import json
import logging

import six
from scipy.special import comb

def binomial(n,k):
    """Exact binomial coefficient, zero outside 0 <= k <= n."""

    return int(comb(int(n),int(k),exact=True))

def is_even(n):
    """Check parity."""

    return n % 2 == 0

def sign(x):
    """Sign of an integer as -1, 0 or 1."""

    return (x > 0) - (x < 0)

def read_json(file_name):
    """Load a JSON run configuration file as a dictionary."""

    assert isinstance(file_name,six.string_types),'Configuration file name should be a string!'
    assert file_name.endswith('.json'),'{} is not a JSON file!'.format(file_name)

    with open(file_name, "r") as json_file:
        return json.load(json_file)

def dump_json(records):
    """Serialize records with stable key order preserved."""

    return json.dumps(records,indent=None,separators=(',',':'))

def write_csv(records,fieldnames,stream):
    """Write a list of dictionaries as CSV rows."""

    writer = csv.DictWriter(stream,fieldnames=fieldnames,extrasaction='ignore',lineterminator='\n')
    writer.writeheader()
    for record in records:
        writer.writerow(record)

def read_csv_rows(file_name):
    """Read CSV rows as dictionaries, skipping comment lines starting with #."""

    with open(file_name, "r") as csv_file:
        lines = [line for line in csv_file if line.strip() and not line.lstrip().startswith('#')]

    return list(csv.DictReader(lines))

def get_logger(logging_level):
    """Configure the root logger to write to stderr at the given level."""

    logger = logging.getLogger()
    logger.setLevel(getattr(logging,logging_level))

    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter('%(levelname)s:%(name)s:%(message)s'))
        logger.addHandler(handler)

    return logger

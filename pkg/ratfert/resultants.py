"""Resultants of rational shadows.

A shadow [a_1' ... a_n'] forgets the crossing information of N[a_1 ... a_n].
Choosing a sign for each of the a_i crossings of the i-th twist region leaves a
net twist c_i in {a_i, a_i - 2, ..., -a_i}, reached by C(a_i, (a_i - |c_i|)/2)
choices, and the resulting link is N[c_1 ... c_n]. The exact distribution over
link classes is computed by accumulating projective fractions from the right,
so shadows with far more than 2**20 assignments stay cheap.
"""

import itertools
import logging
from fractions import Fraction
from collections import Counter

import numpy as np

from ratfert import defaults
from ratfert.frac_core import (ProjectiveRational,LinkClass,check_word,class_from_fraction,classify,
                               is_canonical,format_word)
from ratfert.utility_classes import RatfertError
from ratfert.utility_functions import binomial

logger = logging.getLogger(__name__)

class LimitExceeded(RatfertError):
    """Raised when brute force enumeration is asked for too many crossings."""

class NonCanonicalShadow(RatfertError):
    """Raised when an operation needs a canonical shadow."""

def check_shadow(shadow):
    """Validate a shadow and return its entries as a tuple of positive integers."""

    entries = check_word(shadow)
    if any(entry < 1 for entry in entries):
        raise RatfertError('Shadow {} must have positive entries!'.format(format_word(entries)))

    return tuple(entries)

def tangle_resolutions(a):
    """Net twists of an a-crossing twist region with their multiplicities, from +a down to -a."""

    if a == 0:
        return [(0,1)]

    return [(a - 2*j,binomial(a,j)) for j in range(a + 1)]

def enumerate_assignments(shadow):
    """Yield (assigned word, multiplicity) for every net twist vector, in odometer order."""

    entries = check_shadow(shadow)

    for choice in itertools.product(*(tangle_resolutions(a) for a in entries)):
        word = tuple(c for c,_ in choice)
        multiplicity = 1
        for _,count in choice:
            multiplicity *= count
        yield word,multiplicity

def fraction_masses(resolutions):
    """Multiplicity of every projective value of N[c_1 ... c_n], c_i ranging over resolutions[i]."""

    states = Counter({(1,0):1}) #infinity
    for choices in reversed(resolutions):
        updated = Counter()
        for (p,q),mass in states.items():
            for c,count in choices:
                new_p,new_q = c*p + q,p
                if new_q < 0 or (new_q == 0 and new_p < 0):
                    new_p,new_q = -new_p,-new_q
                updated[(new_p,new_q)] += mass*count
        states = updated

    return states

def _classify_masses(states):
    """Group fraction masses into chiral link classes."""

    counts = Counter()
    for (p,q),mass in states.items():
        counts[class_from_fraction(ProjectiveRational(p,q))] += mass

    return counts

class ResultantDistribution(object):
    """Exact multiplicity of every resultant class of a shadow.

    Attributes:
         shadow (tuple): The shadow entries.
         counts (Counter): Chiral LinkClass to multiplicity; multiplicities add up to 2**c.
    """

    def __init__(self,shadow,counts):
        self.shadow = tuple(shadow)
        self.counts = Counter(counts)

    def __eq__(self,other):
        return isinstance(other,ResultantDistribution) and self.counts == other.counts

    def __ne__(self,other):
        return not self == other

    def __repr__(self):
        return 'ResultantDistribution({},{} classes,total={})'.format(format_word(self.shadow),len(self.counts),self.total)

    @property
    def crossing(self):
        return sum(self.shadow)

    @property
    def total(self):
        return sum(self.counts.values())

    def amphichiral(self):
        """Counts with each class merged with its mirror image."""

        merged = Counter()
        for link,count in self.counts.items():
            merged[link.identified()] += count

        return merged

    def view(self,mirror_identified=False):
        return self.amphichiral() if mirror_identified else Counter(self.counts)

    def distinct(self,mirror_identified=True):
        """Set of distinct resultant classes."""

        return set(self.view(mirror_identified))

    def count(self,link,mirror_identified=True):
        """Multiplicity of a class (a word is classified first)."""

        if not isinstance(link,LinkClass):
            link = classify(link)
        if mirror_identified:
            link = link.identified()

        return self.view(mirror_identified)[link]

    def count_where(self,predicate):
        """Total multiplicity of the chiral classes satisfying a predicate."""

        return sum(count for link,count in self.counts.items() if predicate(link))

    def probabilities(self,mirror_identified=True):
        """Exact probability of each class when every crossing sign is equally likely."""

        total = 2**self.crossing

        return {link:Fraction(count,total) for link,count in self.view(mirror_identified).items()}

    def most_likely(self,mirror_identified=True):
        """Most frequent nontrivial resultant (ties broken by smaller crossing, p, q)."""

        nontrivial = [(link,count) for link,count in self.view(mirror_identified).items() if not link.is_trivial]
        if not nontrivial:
            return None

        return min(nontrivial,key=lambda item:(-item[1],item[0].crossing,item[0].p,item[0].q_chiral))[0]

    def to_records(self,catalog=None,mirror_identified=False):
        """Rows {p,q,components,crossing,name,count,probability} sorted by (crossing,p,q)."""

        total = 2**self.crossing
        records = []
        for link,count in self.view(mirror_identified).items():
            q = link.q_amphi if mirror_identified else link.q_chiral
            name = catalog.name_of(link) if catalog is not None else link.label
            records.append({'p':link.p,'q':q,'components':link.components,'crossing':link.crossing,
                            'name':name,'count':count,'probability':str(Fraction(count,total))})

        return sorted(records,key=lambda record:(record['crossing'],record['p'],record['q']))

def resultant_distribution(shadow):
    """Exact resultant distribution of a shadow.

    Args:
         shadow (list): Positive entries a_1' ... a_n'.

    Returns:
         ResultantDistribution: Chiral classes with multiplicities adding up to 2**c.
    """

    entries = check_shadow(shadow)
    counts = _classify_masses(fraction_masses([tangle_resolutions(a) for a in entries]))
    logger.debug('{}:{} chiral resultant classes'.format(format_word(entries),len(counts)))

    return ResultantDistribution(entries,counts)

def brute_force_distribution(shadow,crossing_limit=defaults.BRUTE_FORCE_CROSSING_LIMIT):
    """Resultant distribution by explicit enumeration of all 2**c crossing signs.

    Each crossing gets an independent sign; the net twist of a region is the sum
    of its signs. Identical net twist vectors are collapsed before classifying.

    Raises:
         LimitExceeded: If the shadow has more than crossing_limit crossings.
    """

    entries = check_shadow(shadow)
    crossing = sum(entries)

    if crossing > crossing_limit:
        raise LimitExceeded('Shadow {} has {} crossings, brute force is limited to {}!'.format(format_word(entries),crossing,crossing_limit))

    codes = np.arange(2**crossing,dtype=np.int64)
    offsets = np.concatenate(([0],np.cumsum(entries)[:-1]))

    nets = np.zeros((codes.size,len(entries)),dtype=np.int16)
    for column,(offset,a) in enumerate(zip(offsets,entries)):
        for bit in range(offset,offset + a):
            nets[:,column] += (1 - 2*((codes >> bit) & 1)).astype(np.int16)

    rows,multiplicities = np.unique(nets,axis=0,return_counts=True)

    counts = Counter()
    for row,multiplicity in zip(rows,multiplicities):
        counts[classify([int(c) for c in row])] += int(multiplicity)

    return ResultantDistribution(entries,counts)

def _amphichiral_classes(entries,nonnegative_lead=False):
    resolutions = [tangle_resolutions(a) for a in entries]
    if nonnegative_lead:
        resolutions[0] = [(c,count) for c,count in resolutions[0] if c >= 0]

    return {link.identified() for link in _classify_masses(fraction_masses(resolutions))}

def resultant_set(shadow,mirror_identified=True,nonnegative_lead=False):
    """Distinct resultant classes of a shadow.

    Args:
         shadow (list): Positive entries.
         mirror_identified (bool): Merge each class with its mirror image.
         nonnegative_lead (bool): Only use assignments with c_1 >= 0.
    """

    entries = check_shadow(shadow)

    if mirror_identified:
        return _amphichiral_classes(entries,nonnegative_lead)

    resolutions = [tangle_resolutions(a) for a in entries]
    if nonnegative_lead:
        resolutions[0] = [(c,count) for c,count in resolutions[0] if c >= 0]

    return set(_classify_masses(fraction_masses(resolutions)))

def is_resultant(shadow,target):
    """Check whether a class (or the class of a word) is a resultant of a shadow, up to mirror image."""

    if not isinstance(target,LinkClass):
        target = classify(target)

    return target.identified() in resultant_set(shadow,mirror_identified=True)

def codim_resultant_count(shadow,k):
    """Number of distinct resultants (up to mirror image) with crossing number c - k.

    Raises:
         NonCanonicalShadow: If the shadow is not canonical.
    """

    entries = check_shadow(shadow)
    if not is_canonical(entries):
        raise NonCanonicalShadow('Shadow {} is not canonical!'.format(format_word(entries)))
    if k not in (0,1,2,3):
        raise RatfertError('Codimension {} is not one of 0,1,2,3!'.format(k))

    target = sum(entries) - k

    return sum(1 for link in resultant_set(entries) if link.crossing == target and not link.is_trivial)

def denominator_distribution(shadow):
    """Resultant distribution of the denominator closure D[shadow] = N[shadow 0]."""

    entries = check_shadow(shadow)
    resolutions = [tangle_resolutions(a) for a in entries] + [tangle_resolutions(0)]

    return ResultantDistribution(entries,_classify_masses(fraction_masses(resolutions)))

"""Closed-form resultant counts and their enumerated counterparts.

A binomial coefficient with an impossible lower index is zero throughout.
Every formula has an `enumerated_*` twin reading the same quantity off
`resultants.resultant_distribution`, so the two can be compared directly.
"""

import math
import inspect
import logging
from collections import Counter

from ratfert.frac_core import classify,format_word
from ratfert.resultants import (check_shadow,codim_resultant_count,denominator_distribution,resultant_distribution,
                                resultant_set)
from ratfert.utility_classes import RatfertError
from ratfert.utility_functions import binomial,is_even

logger = logging.getLogger(__name__)

class ParityMismatch(RatfertError):
    """Raised when a net twist and a region size have different parities."""

class DomainViolation(RatfertError):
    """Raised when arguments fall outside the range a formula is stated for."""

class UnsupportedCase(RatfertError):
    """Raised for parity combinations without a closed form."""

THREE_TANGLE_CASES = ('even-even-odd','even-odd-odd')

def _check_positive(**values):
    for name,value in values.items():
        if not isinstance(value,int) or value < 1:
            raise DomainViolation('{}={} must be a positive integer!'.format(name,value))

def torus_resultant_count(a1,k):
    """Number of N[k] resultants of the N[a1'] shadow (one chirality)."""

    _check_positive(a1=a1)
    if (a1 - k) % 2:
        raise ParityMismatch('Net twist {} and region size {} have different parities!'.format(k,a1))
    if abs(k) > a1:
        raise DomainViolation('Net twist {} exceeds region size {}!'.format(k,a1))

    return binomial(a1,(a1 - abs(k))//2)

def torus_distribution(a1):
    """Closed-form resultant distribution of N[a1'] keyed by chiral class."""

    _check_positive(a1=a1)

    counts = Counter()
    for k in range(-a1,a1 + 1,2):
        counts[classify([k])] += torus_resultant_count(a1,k)

    return counts

def two_tangle_counts_even_even(a1,a2,k,l):
    """Counts of N[k l], N[(k-1) 1 (l-1)] and unknot resultants of N[a1' a2'], all even.

    Returns:
         tuple: (count of N[k l], count of N[(k-1) 1 (l-1)], count of unknots)
    """

    _check_positive(a1=a1,a2=a2,k=k,l=l)
    if not all(is_even(value) for value in (a1,a2,k,l)):
        raise DomainViolation('Even-even counts need a1,a2,k,l even, got {},{},{},{}!'.format(a1,a2,k,l))

    pair = binomial(a1,(a1 - k)//2)*binomial(a2,(a2 - l)//2) + binomial(a1,(a1 - l)//2)*binomial(a2,(a2 - k)//2)
    unknot = 2**a2*binomial(a1,a1//2) + (2**a1 - binomial(a1,a1//2))*binomial(a2,a2//2)

    return pair,pair,unknot

def two_tangle_counts_even_odd(a1,a2,k,l):
    """Counts of N[k l] (equal to N[(k-1) 1 (l-1)]), N[k+1] and unknot resultants of N[a1' a2'].

    Args:
         a1 (int): Even region size.
         a2 (int): Odd region size, at least 3.
         k (int): Even net twist, at least 2.
         l (int): Odd net twist, at least 3.
    """

    _check_positive(a1=a1,a2=a2,k=k,l=l)
    if not (is_even(a1) and is_even(k)):
        raise DomainViolation('a1={} and k={} must be even!'.format(a1,k))
    if is_even(a2) or is_even(l) or a2 < 3 or l < 3:
        raise DomainViolation('a2={} and l={} must be odd and at least 3!'.format(a2,l))

    pair = 2*binomial(a1,(a1 - k)//2)*binomial(a2,(a2 - l)//2)
    torus = 2*binomial(a2,(a2 - 1)//2)*(binomial(a1,(a1 - k)//2) + binomial(a1,(a1 - k - 2)//2))
    unknot = 2**a2*binomial(a1,a1//2) + 2*binomial(a1,(a1 - 2)//2)*binomial(a2,(a2 - 1)//2)

    return pair,torus,unknot

def three_tangle_case(a1,a2,a3):
    """Parity tag of a length three shadow, None when no closed form exists."""

    parities = tuple('even' if is_even(a) else 'odd' for a in (a1,a2,a3))
    tag = '-'.join(parities)

    return tag if tag in THREE_TANGLE_CASES else None

def three_tangle_unknot_count(a1,a2,a3,case=None):
    """Unknot resultants of N[a1' a2' a3'] for the (even,even,odd) and (even,odd,odd) parities.

    Raises:
         UnsupportedCase: For any other parity combination.
         ParityMismatch: If an explicit case tag does not match the parities.
    """

    _check_positive(a1=a1,a2=a2,a3=a3)
    actual = three_tangle_case(a1,a2,a3)

    if case is not None and case not in THREE_TANGLE_CASES:
        raise UnsupportedCase('{} is not a supported parity case!'.format(case))
    if actual is None:
        raise UnsupportedCase('No closed form for parities of ({},{},{})!'.format(a1,a2,a3))
    if case is not None and case != actual:
        raise ParityMismatch('({},{},{}) has parities {}, not {}!'.format(a1,a2,a3,actual,case))

    common = 2**(a2 + 1)*binomial(a1,a1//2)*binomial(a3,(a3 - 1)//2)

    if actual == 'even-even-odd':
        inner = sum(binomial(a1,(a1 - c1)//2)*(binomial(a3,(a3 - c1 + 1)//2) + binomial(a3,(a3 - c1 - 1)//2))
                    for c1 in range(2,a1 + 1,2))
        return (common + 2*binomial(a1,(a1 - 2)//2)*binomial(a2,(a2 - 2)//2)*binomial(a3,(a3 - 1)//2)
                + 2*binomial(a2,a2//2)*inner)

    return (common + 2*binomial(a1,(a1 - 2)//2)*binomial(a2,(a2 - 1)//2)*binomial(a3,(a3 - 3)//2)
            + 2*binomial(a2,(a2 - 1)//2)*binomial(a3,(a3 - 1)//2)*(2**a1 - binomial(a1,a1//2)))

def max_unique_resultants(shadow):
    """Bound on distinct resultants once the sign of c_1 is fixed nonnegative."""

    entries = check_shadow(shadow)

    bound = (entries[0] + 2)//2
    for a in entries[1:]:
        bound *= a + 1

    return bound

def codim_upper_bound(d,k):
    """Bound on distinct resultants k crossings below a length d canonical word."""

    _check_positive(d=d)

    if k == 2:
        return binomial(d,1) + binomial(d - 1,2)
    elif k == 3:
        return binomial(d,1)*binomial(d - 1,1) + binomial(d - 1,3)

    raise UnsupportedCase('Codimension bound is only stated for k = 2 or 3, got {}!'.format(k))

def codim_upper_bound_polynomial(d,k):
    """Polynomial form of codim_upper_bound."""

    if k == 2:
        return (d**2 - d + 2)//2
    elif k == 3:
        return (d**3 + 5*d - 6)//6

    raise UnsupportedCase('Codimension bound is only stated for k = 2 or 3, got {}!'.format(k))

def unlink_domination_threshold(k):
    """Smallest even n >= k for which N[n'] has at least as many N[k] resultants (both chiralities) as unlinks."""

    if not isinstance(k,int) or k < 2 or not is_even(k):
        raise DomainViolation('k={} must be an even integer of at least 2!'.format(k))

    n = k
    while 2*binomial(n,(n - k)//2) < binomial(n,n//2):
        n += 2

    return n

def unlink_domination_polynomial_threshold(k):
    """Same threshold from the reduced polynomial inequality.

    With m = n/2 and j = k/2, 2*C(n,m-j) >= C(n,m) reduces to
    2*m*(m-1)*...*(m-j+1) >= (m+1)*(m+2)*...*(m+j). For k = 4 this is
    n**2 - 10*n - 8 >= 0, whose positive root is 5 + sqrt(33).
    """

    if not isinstance(k,int) or k < 2 or not is_even(k):
        raise DomainViolation('k={} must be an even integer of at least 2!'.format(k))

    j = k//2
    m = j
    while 2*math.prod(range(m - j + 1,m + 1)) < math.prod(range(m + 1,m + j + 1)):
        m += 1

    return 2*m

def denominator_resolution_count(shadow):
    """(2**a_n, shadow without a_n): D[shadow] resolves as 2**a_n copies of N[a_1' ... a_{n-1}']."""

    entries = check_shadow(shadow)

    return 2**entries[-1],entries[:-1]

def enumerated_two_tangle_counts_even_even(a1,a2,k,l):
    """Enumerated counterpart of two_tangle_counts_even_even.

    Counts are chiral when k != l and merged with the mirror when k == l.
    """

    distribution = resultant_distribution([a1,a2])
    mirror_identified = k == l

    return (distribution.count(classify([k,l]),mirror_identified),
            distribution.count(classify([k - 1,1,l - 1]),mirror_identified),
            distribution.count_where(lambda link:link.p == 1))

def enumerated_two_tangle_counts_even_odd(a1,a2,k,l):
    """Enumerated counterpart of two_tangle_counts_even_odd, merged with mirrors."""

    distribution = resultant_distribution([a1,a2])

    return (distribution.count(classify([k,l])),
            distribution.count(classify([k + 1])),
            distribution.count_where(lambda link:link.p == 1))

def enumerated_unknot_count(shadow):
    """Number of unknot resultants of a shadow."""

    return resultant_distribution(shadow).count_where(lambda link:link.p == 1)

def compare_counts(formula_value,enumerated_value,bound=False):
    """Record used by the counts subcommand; a bound agrees when the enumerated value does not exceed it."""

    agree = enumerated_value <= formula_value if bound else formula_value == enumerated_value

    return {'formula_value':formula_value,'enumerated_value':enumerated_value,'agree':agree}

def _torus_query(a1,k):
    #[k] and [-k] close to the same class for |k| <= 2
    torus_resultant_count(a1,k)
    link = classify([k])
    formula = sum(torus_resultant_count(a1,j) for j in range(-a1,a1 + 1,2) if classify([j]) == link)

    return [("N[{}] in N[{}']".format(k,a1),compare_counts(formula,resultant_distribution([a1]).count(link,mirror_identified=False)))]

def _two_tangle_query(labels,formula,enumerated,shadow):
    return [('{} in N{}'.format(label,format_word(shadow)),compare_counts(f,e)) for label,f,e in zip(labels,formula,enumerated)]

def _even_even_query(a1,a2,k,l):
    labels = ('N[{} {}]'.format(k,l),'N[{} 1 {}]'.format(k - 1,l - 1),'unknot')

    return _two_tangle_query(labels,two_tangle_counts_even_even(a1,a2,k,l),enumerated_two_tangle_counts_even_even(a1,a2,k,l),[a1,a2])

def _even_odd_query(a1,a2,k,l):
    labels = ('N[{} {}]'.format(k,l),'N[{}]'.format(k + 1),'unknot')

    return _two_tangle_query(labels,two_tangle_counts_even_odd(a1,a2,k,l),enumerated_two_tangle_counts_even_odd(a1,a2,k,l),[a1,a2])

def _unknot_query(a1,a2,a3):
    formula = three_tangle_unknot_count(a1,a2,a3)

    return [('unknot in N[{} {} {}]'.format(a1,a2,a3),compare_counts(formula,enumerated_unknot_count([a1,a2,a3])))]

def _max_unique_query(*shadow):
    enumerated = len(resultant_set(shadow,nonnegative_lead=True))

    return [('distinct in N{}'.format(format_word(shadow)),compare_counts(max_unique_resultants(shadow),enumerated,bound=True))]

def _codim_query(*values):
    if len(values) < 2:
        raise DomainViolation('codim needs a shadow followed by k!')
    shadow,k = list(values[:-1]),values[-1]
    enumerated = codim_resultant_count(shadow,k)

    return [('codim-{} of {}'.format(k,format_word(shadow)),compare_counts(codim_upper_bound(len(shadow),k),enumerated,bound=True))]

def _threshold_query(k):
    return [('unlink domination for k={}'.format(k),compare_counts(unlink_domination_polynomial_threshold(k),unlink_domination_threshold(k)))]

def _chiral_label(link):
    """Fraction label keeping a link apart from its mirror image."""

    return link.label if link.is_trivial else '{}/{}'.format(link.p,link.q_chiral)

def _denominator_query(*shadow):
    multiplier,residual = denominator_resolution_count(shadow)
    closure = denominator_distribution(shadow)
    residual_counts = resultant_distribution(residual).counts if residual else Counter({classify([1]):1})

    records = []
    for link in sorted(set(closure.counts) | set(residual_counts),key=lambda link:(link.crossing,link.p,link.q_chiral)):
        records.append(('{} in D{}'.format(_chiral_label(link),format_word(shadow)),compare_counts(multiplier*residual_counts[link],closure.counts[link])))

    return records

#Query name -> (function of integer arguments, argument description)
COUNT_QUERIES = {'torus':(_torus_query,'a1 k'),
                 'even-even':(_even_even_query,'a1 a2 k l'),
                 'even-odd':(_even_odd_query,'a1 a2 k l'),
                 'unknot':(_unknot_query,'a1 a2 a3'),
                 'max-unique':(_max_unique_query,'a1 ... an'),
                 'codim':(_codim_query,'a1 ... an k'),
                 'threshold':(_threshold_query,'k'),
                 'denominator':(_denominator_query,'a1 ... an')}

def count_query(kind,values):
    """Formula against enumeration for one query.

    Args:
         kind (str): One of the keys of COUNT_QUERIES.
         values (list): Integer arguments of the query.

    Returns:
         list: Records {query,formula_value,enumerated_value,agree}.
    """

    if kind not in COUNT_QUERIES:
        raise UnsupportedCase('{} is not a count query - valid queries are:{}!'.format(kind,sorted(COUNT_QUERIES)))

    function,arguments = COUNT_QUERIES[kind]
    integers = [int(value) for value in values]
    try:
        inspect.signature(function).bind(*integers)
    except TypeError:
        raise DomainViolation('{} expects arguments {}, got {}!'.format(kind,arguments,list(values)))

    records = []
    for query,comparison in function(*integers):
        record = {'query':query}
        record.update(comparison)
        records.append(record)
        logger.debug('{}:{}'.format(query,comparison))

    return records

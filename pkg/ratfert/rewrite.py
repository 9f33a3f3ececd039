"""Symbolic normalization of sign-assigned tangle words.

Rules, applied one at a time until none matches:

  zero     k 0 l      -> k+l            (interior zero)
  drop     ... x 0    -> ...            (trailing zero, N[T 0] is D[T])
  untangle a -b T     -> a-1 1 b-1 -T   (leftmost sign disagreement, signs follow a)
  absorb   ... k 1    -> ... k+1        (unit at the end with the sign of k)

Every rule preserves the projective value of the word exactly. Positions are
1-based, matching c_1 ... c_n.
"""

import logging
from collections import namedtuple

from ratfert.frac_core import check_word,classify,cf_eval,format_word
from ratfert.utility_classes import RatfertError
from ratfert.utility_functions import sign

logger = logging.getLogger(__name__)

class SignsAgree(RatfertError):
    """Raised when untangling is requested at a pair of entries that do not disagree in sign."""

class StepBudgetExceeded(RatfertError):
    """Raised when normalization does not terminate within its step budget."""

RewriteStep = namedtuple('RewriteStep',['rule','position','before','after'])

NormalForm = namedtuple('NormalForm',['link_class','word','trace'])

def merge_zero(word,position):
    """Absorb the zero at a 1-based position.

    An interior zero merges its neighbours (k 0 l -> k+l). A trailing zero in a
    word of length at least 3 drops the last two entries. A leading zero and the
    word [x 0] are left unchanged.
    """

    entries = check_word(word)
    n = len(entries)
    j = position - 1

    assert entries[j] == 0,'Entry at position {} of {} is not zero!'.format(position,format_word(entries))

    if 0 < j < n - 1:
        return entries[:j-1] + [entries[j-1] + entries[j+1]] + entries[j+2:]
    elif j == n - 1 and n >= 3:
        return entries[:-2]

    return entries

def untangle_step(word,i):
    """Untangle the pair c_i, c_{i+1} of opposite signs (or merge through c_{i+1} = 0).

    Args:
         word (list): Sign-assigned word.
         i (int): 1-based position of c_i.

    Returns:
         list: Rewritten word with the same projective value.

    Raises:
         SignsAgree: If c_i and c_{i+1} do not have strictly opposite signs and c_{i+1} is not zero.
    """

    entries = check_word(word)
    n = len(entries)

    if not 1 <= i < n:
        raise SignsAgree('Position {} has no right neighbour in {}!'.format(i,format_word(entries)))

    a,b = entries[i-1],entries[i]

    if b == 0:
        return merge_zero(entries,i+1)
    if a*b >= 0:
        raise SignsAgree('Entries {} and {} at position {} of {} do not disagree in sign!'.format(a,b,i,format_word(entries)))

    s = sign(a)
    result = entries[:i-1] + [s*(abs(a)-1),s,s*(abs(b)-1)] + [-entry for entry in entries[i+1:]]

    if result[i+1] == 0: #|c_{i+1}| = 1
        result = merge_zero(result,i+2)
    if result[i-1] == 0: #|c_i| = 1
        result = merge_zero(result,i)

    return result

def step_budget(word):
    """Upper bound on the number of rewrites normalize performs."""

    entries = check_word(word)

    return 2*sum(abs(entry) for entry in entries) + len(entries)

def next_rule(entries):
    """Rule and 1-based position of the next rewrite, (None,None) for a terminal word."""

    n = len(entries)

    for j in range(1,n-1):
        if entries[j] == 0:
            return 'zero',j+1

    if n >= 3 and entries[-1] == 0:
        return 'drop',n

    for j in range(n-1):
        if entries[j]*entries[j+1] < 0:
            return 'untangle',j+1

    if n >= 2 and abs(entries[-1]) == 1 and entries[-2]*entries[-1] > 0:
        return 'absorb',n-1

    return None,None

def apply_rule(rule,entries,position):
    """Apply a named rule at a 1-based position."""

    if rule in ('zero','drop'):
        return merge_zero(entries,position)
    elif rule == 'untangle':
        return untangle_step(entries,position)
    elif rule == 'absorb':
        return entries[:-2] + [entries[-2] + entries[-1]]

    raise ValueError('{} is not a valid rewrite rule!'.format(rule))

def normalize(word):
    """Rewrite a word until all nonzero entries share one sign.

    Returns:
         NormalForm: Class of the word, terminal word and tuple of RewriteStep.
    """

    entries = check_word(word)
    budget = step_budget(entries)
    value = cf_eval(entries)
    trace = []

    while True:
        rule,position = next_rule(entries)
        if rule is None:
            break
        if len(trace) >= budget:
            raise StepBudgetExceeded('Normalization of {} did not terminate within {} steps!'.format(format_word(word),budget))

        after = apply_rule(rule,entries,position)
        assert cf_eval(after) == value,'Rule {} changed the value of {}!'.format(rule,format_word(entries))
        logger.debug('{}@{}:{} -> {}'.format(rule,position,format_word(entries),format_word(after)))

        trace.append(RewriteStep(rule,position,tuple(entries),tuple(after)))
        entries = after

    return NormalForm(classify(entries),tuple(entries),tuple(trace))

def format_trace(trace):
    """One rewrite per line: 'rule@position: [before] -> [after]'."""

    return ['{}@{}: {} -> {}'.format(step.rule,step.position,format_word(step.before),format_word(step.after)) for step in trace]

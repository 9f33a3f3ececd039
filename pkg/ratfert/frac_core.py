"""Exact continued fraction evaluation, canonical words and classification of rational links.

A word (a_1 ... a_n) stands for the continued fraction a_1 + 1/(a_2 + 1/(... + 1/a_n)).
Values are projective rationals so that zero entries (which arise when twist
regions are resolved) never need special casing. Two rational links N(p/q)
and N(p'/q') are equivalent iff p = p' and q' is congruent to q or to the
inverse of q mod p; allowing -q as well identifies a link with its mirror.
"""

import math
import logging
from collections import namedtuple

import six

from ratfert.utility_classes import RatfertError

logger = logging.getLogger(__name__)

class InvalidWord(RatfertError):
    """Raised when a word is empty or contains non-integer entries."""

class NoCanonicalWord(RatfertError):
    """Raised when the unknot or the unlink is asked for a canonical word."""

class ProjectiveRational(namedtuple('ProjectiveRational',['p','q'])):
    """A reduced fraction p/q with q >= 0; the value infinity is 1/0."""

    __slots__ = ()

    @classmethod
    def from_pair(cls,p,q):
        """Reduce and sign normalize a numerator, denominator pair."""

        assert (p,q) != (0,0),'The pair 0/0 is not a projective rational!'

        g = math.gcd(p,q)
        p,q = p//g,q//g
        if q < 0 or (q == 0 and p < 0):
            p,q = -p,-q

        return cls(p,q)

    @property
    def is_infinite(self):
        return self.q == 0

    def __str__(self):
        return '{}/{}'.format(self.p,self.q)

class LinkClass(namedtuple('LinkClass',['p','q_chiral','q_amphi','components','crossing'])):
    """Isotopy class of a rational link.

    Equality of two instances is equality of chiral classes. Use `amphi_key`
    (or `identified()`) to compare up to mirror image.

    Attributes:
         p (int): Determinant, 0 for the unlink and 1 for the unknot.
         q_chiral (int): Smallest element of the orbit {q, 1/q} mod p.
         q_amphi (int): Smallest element of the orbit {q, -q, 1/q, -1/q} mod p.
         components (int): 1 for knots, 2 for two-component links.
         crossing (int): Minimal crossing number.
    """

    __slots__ = ()

    @property
    def chiral_key(self):
        return (self.p,self.q_chiral)

    @property
    def amphi_key(self):
        return (self.p,self.q_amphi)

    def key(self,mirror_identified=False):
        """Orbit key used for comparisons."""

        return self.amphi_key if mirror_identified else self.chiral_key

    @property
    def is_trivial(self):
        """True for the unknot and the two-component unlink."""

        return self.p < 2

    @property
    def is_knot(self):
        return self.components == 1

    @property
    def label(self):
        """Fraction label p/q of the amphichiral representative."""

        if self.p == 0:
            return '0^2_1'
        elif self.p == 1:
            return '0_1'

        return '{}/{}'.format(self.p,self.q_amphi)

    def mirror(self):
        """Class of the mirror image."""

        if self.is_trivial:
            return self

        return link_class(self.p,-self.q_chiral)

    def identified(self):
        """Representative of the class once a link is identified with its mirror."""

        if self.is_trivial:
            return self

        return link_class(self.p,self.q_amphi)

    def is_amphichiral(self):
        return self.mirror() == self

UNLINK = LinkClass(0,0,0,2,0)
UNKNOT = LinkClass(1,0,0,1,0)

def check_word(word):
    """Validate a word and return it as a list of Python integers."""

    if isinstance(word,six.string_types):
        word = parse_word(word)

    try:
        entries = [int(entry) for entry in word]
    except (TypeError,ValueError):
        raise InvalidWord('{} is not a sequence of integers!'.format(word))

    if any(entry != original for entry,original in zip(entries,word)):
        raise InvalidWord('{} contains non-integer entries!'.format(word))
    if not entries:
        raise InvalidWord('A word needs at least one entry!')

    return entries

def parse_word(text):
    """Parse '3 2', '[3 2]', '3,2' or a fraction '7/2' into a list of integers."""

    cleaned = text.strip().strip('[]()').replace(',',' ')

    if '/' in cleaned:
        try:
            p,q = (int(part) for part in cleaned.split('/'))
        except ValueError:
            raise InvalidWord('{} is not a valid fraction!'.format(text))
        if (p,q) == (0,0):
            raise InvalidWord('0/0 is not a valid fraction!')
        return fraction_word(p,q)

    try:
        entries = [int(token) for token in cleaned.split()]
    except ValueError:
        raise InvalidWord('{} is not a valid word!'.format(text))
    if not entries:
        raise InvalidWord('Empty word!')

    return entries

def format_word(word):
    """Bracketed form '[3 2]'."""

    return '[' + ' '.join(str(entry) for entry in word) + ']'

def reverse_word(word):
    """Literal reversal of a word."""

    return list(reversed(check_word(word)))

def is_canonical(word):
    """A positive word with end entries of at least 2 (a single entry of at least 2)."""

    entries = check_word(word)

    return all(entry >= 1 for entry in entries) and entries[0] >= 2 and entries[-1] >= 2

def euclid_word(p,q):
    """All-positive continued fraction expansion of p/q for p, q >= 1 (leading 0 when p < q)."""

    assert p >= 1 and q >= 1,'Euclid expansion needs p, q >= 1, got {}/{}!'.format(p,q)

    terms = []
    while q:
        a,r = divmod(p,q)
        terms.append(a)
        p,q = q,r

    return terms

def fraction_word(p,q):
    """A word of a single sign whose value is p/q (1/0 gives [1 0])."""

    value = ProjectiveRational.from_pair(p,q)
    if value.is_infinite:
        return [1,0]
    if value.p == 0:
        return [0]
    if value.p < 0:
        return [-entry for entry in fraction_word(-value.p,value.q)]

    return euclid_word(value.p,value.q)

def cf_eval(word):
    """Projective value of a word, evaluated right to left as (p,q) <- (a*p + q, p)."""

    entries = check_word(word)

    p,q = entries[-1],1
    for a in reversed(entries[:-1]):
        p,q = a*p + q,p

    return ProjectiveRational.from_pair(p,q)

def _amphichiral_orbit(p,q):
    """The residues q, -q, 1/q, -1/q mod p."""

    inverse = pow(q,-1,p)

    return {q % p,(-q) % p,inverse,(-inverse) % p}

def link_class(p,q):
    """Class of N(p/q) for p >= 2 and gcd(p,q) = 1."""

    assert p >= 2 and math.gcd(p,q) == 1,'{}/{} does not describe a nontrivial rational link!'.format(p,q)

    q = q % p
    inverse = pow(q,-1,p)
    orbit = _amphichiral_orbit(p,q)
    crossing = min(sum(euclid_word(p,r)) for r in orbit)

    return LinkClass(p,min(q,inverse),min(orbit),1 if p % 2 else 2,crossing)

def class_from_fraction(value):
    """Classify a projective rational."""

    if value.is_infinite:
        return UNKNOT

    P = abs(value.p)
    if P == 0:
        return UNLINK
    elif P == 1:
        return UNKNOT

    Q = value.q if value.p > 0 else -value.q

    return link_class(P,Q)

def classify(word):
    """Isotopy class of the numerator closure N[word]."""

    return class_from_fraction(cf_eval(word))

def equivalent(word1,word2,mirror_identified=False):
    """Check whether two words close to the same link (up to mirror image if flag is set)."""

    return classify(word1).key(mirror_identified) == classify(word2).key(mirror_identified)

def canonical_word(link):
    """Canonical all-positive word of a nontrivial class.

    Args:
         link (LinkClass): The class (a word is also accepted and classified first).

    Returns:
         list: Expansion of p/q* with first and last entry at least 2 and entry sum equal to the crossing number. Of the two mutually reversed candidates the lexicographically largest is returned.
    """

    if not isinstance(link,LinkClass):
        link = classify(link)

    if link.is_trivial:
        raise NoCanonicalWord('{} has no canonical positive word!'.format(link.label))

    candidates = [euclid_word(link.p,r) for r in _amphichiral_orbit(link.p,link.q_amphi) if 2*r <= link.p]
    candidates = [word for word in candidates if sum(word) == link.crossing]

    return max(candidates)

def denominator_class(word):
    """Class of the denominator closure D[word] = N[word without its last entry]."""

    entries = check_word(word)
    if len(entries) == 1:
        return UNKNOT

    return classify(entries[:-1])

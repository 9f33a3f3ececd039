"""Catalog of named rational links, fertility numbers and trunk machinery.

The fertility number F(L) of a nontrivial rational link L is the largest m
such that every prime link with the same number of components and crossing
number at most m is a resultant of the shadow of L. Up to 7 crossings for
knots and 6 crossings for two-component links every prime target is
rational, and F never exceeds those values, so the targets are exactly the
rational classes produced by `generate_rational_classes`.
"""

import logging
import functools
import itertools
from collections import namedtuple

import six

from ratfert import defaults
from ratfert.counting import DomainViolation
from ratfert.frac_core import (LinkClass,canonical_word,check_word,classify,format_word,is_canonical,
                               parse_word,reverse_word)
from ratfert.resultants import resultant_set
from ratfert.utility_classes import Logging,RatfertError
from ratfert.utility_functions import is_even,read_csv_rows

logger = logging.getLogger(__name__)

class Undefined(RatfertError):
    """Raised when a fertility quantity is not defined for the input."""

class NonCanonicalWord(RatfertError):
    """Raised when an operation needs a canonical word."""

class CatalogInconsistent(RatfertError):
    """Raised when a catalog row does not match the class of its word."""

CatalogEntry = namedtuple('CatalogEntry',['name','word','link_class','crossing','components','fertility'])

Trunk = namedtuple('Trunk',['length','members'])

FamilyRow = namedtuple('FamilyRow',['group','trunk','pattern','components','fertility','corrected'])

LocalFertilityCheck = namedtuple('LocalFertilityCheck',['word','source','fertility','passed'])

class LocalFertilityReport(namedtuple('LocalFertilityReport',['components','length','required','checks'])):
    """Outcome of checking the trunks below a given length for local fertility."""

    __slots__ = ()

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def failures(self):
        return [check for check in self.checks if not check.passed]

class Catalog(Logging):
    """Named rational links with their tabulated fertility numbers."""

    count = 0 #Object count

    def __init__(self,rows=None,source=defaults.CATALOG_FILE,verbosity='INFO',identifier=''):
        """Creates an instance of `Catalog`.

        Args:
          rows (list): Row dictionaries with keys name, word, crossing, components, fertility. Read from `source` if None.
          source (str): CSV file with the same columns.
          verbosity (str): Logging level.
          identifier (str): Prefix for the instance name.

        Raises:
          CatalogInconsistent: If a row does not classify to its stated crossing number and component count, or is a duplicate.
        """

        self.register_instance(identifier,verbosity)

        if rows is None:
            self.logger.debug('{}:Reading catalog from {}'.format(self.name,source))
            rows = read_csv_rows(source)
        self.source = source

        self.entries = []
        self._by_key = {}
        self._by_name = {}
        for row in rows:
            self.add_entry(row)

        self.logger.info('{}:Loaded {} catalog entries'.format(self.name,len(self.entries)))

    def add_entry(self,row):
        """Validate a row and add it to the catalog."""

        word = parse_word(row['word']) if isinstance(row['word'],six.string_types) else check_word(row['word'])
        link = classify(word)
        crossing = int(row['crossing'])
        components = int(row['components'])
        fertility = row.get('fertility')
        fertility = int(fertility) if fertility not in (None,'') else None

        if link.crossing != crossing or link.components != components:
            raise CatalogInconsistent('{}:{} classifies to crossing {} with {} components, table states {} and {}!'.format(
                self.name,format_word(word),link.crossing,link.components,crossing,components))

        name = row.get('name') or link.label
        if name in self._by_name:
            raise CatalogInconsistent('{}:Duplicate name {}!'.format(self.name,name))
        if link.amphi_key in self._by_key:
            raise CatalogInconsistent('{}:{} repeats the class of {}!'.format(self.name,name,self._by_key[link.amphi_key].name))

        entry = CatalogEntry(name,tuple(word),link,crossing,components,fertility)
        self.entries.append(entry)
        self._by_key[link.amphi_key] = entry
        self._by_name[name] = entry

        return entry

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def lookup(self,link):
        """Entry of a class (or of the class of a word), None if it is not tabulated."""

        if not isinstance(link,LinkClass):
            link = classify(link)

        return self._by_key.get(link.amphi_key)

    def by_name(self,name):
        """Entry with a given name."""

        if name not in self._by_name:
            raise KeyError('{}:{} is not in the catalog!'.format(self.name,name))

        return self._by_name[name]

    def name_of(self,link):
        """Catalog name, or the fraction label for classes outside the catalog."""

        if not isinstance(link,LinkClass):
            link = classify(link)
        entry = self.lookup(link)

        return entry.name if entry is not None else link.label

    def with_fertility(self,components=None):
        """Entries with a tabulated fertility number."""

        return [entry for entry in self.entries
                if entry.fertility is not None and (components is None or entry.components == components)]

def load_catalog(source=None,verbosity='INFO'):
    """Load and validate a catalog from a CSV path, from row dictionaries, or the shipped table if None."""

    if source is None:
        return Catalog(verbosity=verbosity)
    elif isinstance(source,six.string_types):
        return Catalog(source=source,verbosity=verbosity)

    return Catalog(rows=list(source),source='<rows>',verbosity=verbosity)

def _words_with_sum(total,first):
    """Compositions of total with first entry `first`, interior entries >= 1 and last entry >= 2."""

    remainder = total - first
    if remainder == 0:
        if first >= 2:
            yield [first]
        return

    for second in range(1,remainder + 1):
        for tail in _words_with_sum(remainder,second):
            yield [first] + tail

def canonical_words(crossing):
    """All canonical words with a given entry sum (both reading directions)."""

    for first in range(2,crossing + 1):
        for word in _words_with_sum(crossing,first):
            yield word

@functools.lru_cache(maxsize=None)
def rational_classes_at(crossing,components):
    """Nontrivial rational classes (up to mirror image) with a given crossing number."""

    classes = set()
    for word in canonical_words(crossing):
        link = classify(word).identified()
        if link.components == components:
            classes.add(link)

    return frozenset(classes)

def generate_rational_classes(max_crossing,components):
    """All nontrivial rational classes with crossing number at most max_crossing, up to mirror image.

    Raises:
         DomainViolation: If max_crossing exceeds the generator bound.
    """

    if max_crossing > defaults.GENERATOR_MAX_CROSSING:
        raise DomainViolation('Rational classes are generated up to {} crossings, got {}!'.format(defaults.GENERATOR_MAX_CROSSING,max_crossing))
    if components not in (1,2):
        raise DomainViolation('Components must be 1 or 2, got {}!'.format(components))

    classes = set()
    for crossing in range(defaults.MINIMUM_TARGET_CROSSING[components],max_crossing + 1):
        classes |= rational_classes_at(crossing,components)

    return classes

@functools.lru_cache(maxsize=4096)
def _shadow_resultants(shadow):
    return frozenset(resultant_set(list(shadow),mirror_identified=True))

def _nontrivial_class(word):
    link = classify(word)
    if link.is_trivial:
        raise Undefined('Fertility is not defined for the trivial link {}!'.format(format_word(word)))

    return link

def _covered_up_to(resultants,components,stop):
    """Largest m <= stop with every target class of crossing at most m among the resultants."""

    start = defaults.MINIMUM_TARGET_CROSSING[components]
    covered = start - 1
    for crossing in range(start,stop + 1):
        if not rational_classes_at(crossing,components) <= resultants:
            break
        covered = crossing

    return covered

def fertility_number(word):
    """Fertility number F(L) of the numerator closure of a word.

    Raises:
         Undefined: For the unknot and the unlink.
    """

    link = _nontrivial_class(word)
    shadow = tuple(canonical_word(link))

    #No resultant exceeds the crossing number of the link itself
    stop = min(defaults.LOCAL_FERTILITY_MAXIMUM[link.components],link.crossing)

    return _covered_up_to(_shadow_resultants(shadow),link.components,stop)

def rational_fertility_number(word,max_crossing=defaults.RATIONAL_FERTILITY_MAX_CROSSING):
    """Rational fertility number F_R(L), computed against rational targets up to max_crossing."""

    if max_crossing > defaults.GENERATOR_MAX_CROSSING:
        raise DomainViolation('Rational targets are generated up to {} crossings, got {}!'.format(defaults.GENERATOR_MAX_CROSSING,max_crossing))

    link = _nontrivial_class(word)
    shadow = tuple(canonical_word(link))

    return _covered_up_to(_shadow_resultants(shadow),link.components,min(max_crossing,link.crossing))

def is_fertile(word):
    """Check whether every prime link with fewer crossings and the same component count is a resultant."""

    link = _nontrivial_class(word)
    needed = link.crossing - 1

    if needed > defaults.LOCAL_FERTILITY_MAXIMUM[link.components]:
        return False

    return fertility_number(word) >= needed

def fertile_links(components):
    """All fertile rational links with a given number of components, ordered by crossing number."""

    found = []
    for crossing in range(defaults.MINIMUM_TARGET_CROSSING[components],defaults.FERTILE_SEARCH_CROSSING[components] + 1):
        for link in sorted(rational_classes_at(crossing,components)):
            if is_fertile(canonical_word(link)):
                found.append(link)

    return found

def fr_minimal_search(crossing,threshold=8):
    """Canonical words of rational knots with a given crossing number whose F_R reaches threshold."""

    words = []
    for link in sorted(rational_classes_at(crossing,1)):
        word = canonical_word(link)
        if rational_fertility_number(word,max_crossing=threshold) >= threshold:
            words.append(word)

    return words

def _oriented(word):
    return max(list(word),reverse_word(word))

def trunk(length):
    """Trunk of a given length: ends (2,2), (3,2) or (3,3), interior entries 1 or 2, one word per reversal pair."""

    if length < 1:
        raise DomainViolation('Trunk length must be at least 1, got {}!'.format(length))
    if length == 1:
        return Trunk(1,((2,),(3,)))

    members = set()
    for ends in ((2,2),(3,2),(3,3)):
        for interior in itertools.product((1,2),repeat=length - 2):
            members.add(tuple(_oriented([ends[0]] + list(interior) + [ends[1]])))

    return Trunk(length,tuple(sorted(members)))

def g(length,components):
    """Smallest fertility number over the trunk members with a given component count.

    Raises:
         Undefined: If no trunk member has that component count.
    """

    values = [fertility_number(word) for word in trunk(length).members if classify(word).components == components]
    if not values:
        raise Undefined('The trunk of length {} has no member with {} components!'.format(length,components))

    return min(values)

def branch_decompose(word):
    """Trunk parent and offsets m_i with a_i = parent_i + 2*m_i.

    End entries map to 2 or 3 and interior entries to 2 or 1, keeping parity.

    Raises:
         NonCanonicalWord: If the word is not canonical.
    """

    entries = check_word(word)
    if not is_canonical(entries):
        raise NonCanonicalWord('{} is not a canonical word!'.format(format_word(entries)))

    n = len(entries)
    parent = []
    for position,a in enumerate(entries):
        if position in (0,n - 1):
            parent.append(2 if is_even(a) else 3)
        else:
            parent.append(2 if is_even(a) else 1)

    return parent,tuple((a - b)//2 for a,b in zip(entries,parent))

def verify_local_fertility_threshold(components,n):
    """Check k-fertility (k = 7 for knots, 6 for links) of the trunks of length n-1 and n-2 and of [2 1^(n-2) 2]."""

    if n < 3:
        raise DomainViolation('Local fertility threshold needs n >= 3, got {}!'.format(n))

    required = defaults.LOCAL_FERTILITY_MAXIMUM[components]
    candidates = []
    for length in (n - 1,n - 2):
        for word in trunk(length).members:
            candidates.append((list(word),'trunk-{}'.format(length)))
    candidates.append(([2] + [1]*(n - 2) + [2],'bridge'))

    checks = []
    for word,source in candidates:
        if classify(word).components != components:
            continue
        value = fertility_number(word)
        checks.append(LocalFertilityCheck(tuple(word),source,value,value >= required))
        logger.debug('{}:{} F={}'.format(source,format_word(word),value))

    return LocalFertilityReport(components,n,required,tuple(checks))

def _closed_form_fertility_link(entries):
    n = len(entries)

    if n == 1:
        return 2 if entries[0] == 2 else 4
    elif n == 2:
        return 5
    elif n == 3:
        return 5 if entries[1] == 1 or (entries[0] == 2 and entries[2] == 2) else 6

    return 6

def _closed_form_fertility_knot_length_3(entries):
    for a1,a2,a3 in (entries,entries[::-1]):
        if not is_even(a1) and not is_even(a2) and not is_even(a3):
            return 4 if a2 == 1 else 5
        elif not is_even(a1) and not is_even(a2) and is_even(a3):
            return 5 if a2 == 1 else 6
        elif not is_even(a1) and is_even(a2) and is_even(a3):
            return 5 if a2 == 2 else 6

    return None

def _closed_form_fertility_knot(entries):
    n = len(entries)

    if n == 1:
        return 3
    elif n == 2:
        if all(is_even(a) for a in entries) or 2 in entries:
            return 4
        return 5
    elif n == 3:
        return _closed_form_fertility_knot_length_3(entries)
    elif n == 4:
        if entries[1] == 1 and entries[2] == 1:
            return 5
        for a in (entries,entries[::-1]):
            if branch_decompose(a)[0] == [3,2,1,2] and a[2] == 1:
                return 5
        return None
    elif n == 5:
        a1,a2,a3,a4,a5 = entries
        if a2 == 1 and a4 == 1 and is_even(a1) and is_even(a5) and not is_even(a3):
            return 5
        return None
    elif n >= 8:
        return defaults.LOCAL_FERTILITY_MAXIMUM[1]

    return None

def predicted_fertility(word):
    """Fertility number from the closed-form classification results, None where none applies."""

    link = _nontrivial_class(word)
    entries = canonical_word(link)

    if link.components == 2:
        return _closed_form_fertility_link(entries)

    return _closed_form_fertility_knot(entries)

def expand_family(pattern,offsets):
    """Word of a starred pattern with starred entries raised by 2*offset.

    Args:
         pattern (str): Entries such as '3* 1 2*'; starred entries may grow by even steps.
         offsets (list): One nonnegative offset per starred entry.
    """

    tokens = pattern.split()
    starred = [token.endswith('*') for token in tokens]
    if len(offsets) != sum(starred):
        raise DomainViolation('{} has {} starred entries, got {} offsets!'.format(pattern,sum(starred),len(offsets)))

    word = []
    remaining = iter(offsets)
    for token,star in zip(tokens,starred):
        value = int(token.rstrip('*'))
        word.append(value + 2*next(remaining) if star else value)

    return word

def family_members(pattern,max_offset=2):
    """Members of a family: all starred entries raised together by 2k, and each starred entry alone, for k <= max_offset."""

    slots = pattern.count('*')
    offset_vectors = [tuple([k]*slots) for k in range(max_offset + 1)]
    for slot in range(slots):
        for k in range(1,max_offset + 1):
            offset_vectors.append(tuple(k if index == slot else 0 for index in range(slots)))

    members = []
    for offsets in offset_vectors:
        word = expand_family(pattern,offsets)
        if word not in members:
            members.append(word)

    return members

def load_families(source=defaults.FAMILIES_FILE):
    """Read the starred family table."""

    return [FamilyRow(row['group'],row['trunk'],row['pattern'],int(row['components']),int(row['fertility']),row['corrected'] == 'yes')
            for row in read_csv_rows(source)]

class FertilityAnalyzer(Logging):
    """Batch fertility computations over a catalog with logging."""

    count = 0 #Object count

    def __init__(self,catalog=None,max_crossing=defaults.RATIONAL_FERTILITY_MAX_CROSSING,verbosity='INFO',identifier=''):
        """Creates an instance of `FertilityAnalyzer`.

        Args:
          catalog (Catalog): Named links used for labels (loaded from the shipped table if None).
          max_crossing (int): Default bound for rational fertility numbers.
        """

        self.register_instance(identifier,verbosity)

        self.catalog = catalog if catalog is not None else Catalog(verbosity=verbosity)
        self.max_crossing = max_crossing

    def record(self,word):
        """Fertility record of a word with its catalog name."""

        link = _nontrivial_class(word)
        shadow = canonical_word(link)
        value = fertility_number(shadow)

        return {'word':format_word(shadow),'name':self.catalog.name_of(link),'components':link.components,
                'crossing':link.crossing,'fertility':value,'fertile':is_fertile(shadow)}

    def table(self,components=None):
        """Fertility records of every catalog entry, ordered by (crossing, p, q)."""

        entries = [entry for entry in self.catalog if components is None or entry.components == components]
        entries.sort(key=lambda entry:(entry.crossing,entry.link_class.p,entry.link_class.q_amphi))
        self.logger.info('{}:Computing fertility numbers of {} catalog entries'.format(self.name,len(entries)))

        return [self.record(entry.word) for entry in entries]

    def table_mismatches(self):
        """Catalog entries whose tabulated fertility number differs from the computed one."""

        mismatches = []
        for entry in self.catalog.with_fertility():
            value = fertility_number(entry.word)
            if value != entry.fertility:
                self.logger.warning('{}:{} {} computed F={} tabulated F={}'.format(self.name,entry.name,format_word(entry.word),value,entry.fertility))
                mismatches.append((entry,value))

        return mismatches

    def family_mismatches(self,rows=None,max_offset=2):
        """Family rows with a member whose fertility number differs from the row value."""

        rows = load_families() if rows is None else rows
        mismatches = []
        for row in rows:
            for word in family_members(row.pattern,max_offset):
                value = fertility_number(word)
                if value != row.fertility:
                    self.logger.warning('{}:Family {} member {} has F={}, row states {}'.format(self.name,row.pattern,format_word(word),value,row.fertility))
                    mismatches.append((row,tuple(word),value))

        return mismatches

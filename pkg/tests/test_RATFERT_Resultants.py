import logging
import unittest
from fractions import Fraction

from ratfert.counting import max_unique_resultants
from ratfert.frac_core import UNKNOT,UNLINK,ProjectiveRational,class_from_fraction,classify
from ratfert.resultants import (LimitExceeded,NonCanonicalShadow,brute_force_distribution,check_shadow,
                                codim_resultant_count,denominator_distribution,enumerate_assignments,
                                is_resultant,resultant_distribution,resultant_set,tangle_resolutions)
from ratfert.utility_classes import RatfertError

from unittest_utilities import random_shadows

def suite():
    """Define a test suite."""
    all_tests = ['test_tangle_resolutions','test_enumerate_assignments','test_hopf_shadow','test_trefoil_shadow',
                 'test_oracle','test_oracle_random','test_distinct','test_probabilities','test_records',
                 'test_codimension','test_heredity','test_denominator','test_errors']

    avoid_tests = []

    tests = list(set(all_tests) - set(avoid_tests))
    print('Following unittest scenarios will be run:{}'.format(tests))
    suite = unittest.TestSuite()

    for test in tests:
        suite.addTest(TestRATFERT(test))

    return suite

class TestRATFERT(unittest.TestCase):

    oracle_shadows = [[2],[3],[2,2],[3,2],[2,1,2],[2,2,1,2],[3,1,1,3],[2,2,2,2]]

    def test_tangle_resolutions(self):
        """Test net twists of a single region."""

        self.assertEqual(tangle_resolutions(3),[(3,1),(1,3),(-1,3),(-3,1)])
        self.assertEqual(tangle_resolutions(2),[(2,1),(0,2),(-2,1)])
        self.assertEqual(tangle_resolutions(0),[(0,1)])

    def test_enumerate_assignments(self):
        """Test odometer order and total multiplicity."""

        assignments = list(enumerate_assignments([1,1]))
        self.assertEqual(assignments,[((1,1),1),((1,-1),1),((-1,1),1),((-1,-1),1)])
        self.assertEqual(sum(count for _,count in enumerate_assignments([3,2])),2**5)

    def test_hopf_shadow(self):
        """Test that N[2'] resolves to two unlinks and two Hopf links."""

        distribution = resultant_distribution([2])
        self.assertEqual(distribution.count(UNLINK),2)
        self.assertEqual(distribution.count(classify([2])),2)
        self.assertEqual(distribution.total,4)

    def test_trefoil_shadow(self):
        """Test chiral and amphichiral counts of N[3']."""

        distribution = resultant_distribution([3])
        self.assertEqual(distribution.count(UNKNOT),6)
        self.assertEqual(distribution.count(classify([3]),mirror_identified=False),1)
        self.assertEqual(distribution.count(classify([-3]),mirror_identified=False),1)
        self.assertEqual(distribution.count([3]),2)
        self.assertEqual(distribution.most_likely(),classify([3]).identified())

    def test_oracle(self):
        """Test fraction accumulation against enumeration of crossing signs."""

        for shadow in self.oracle_shadows:
            distribution = resultant_distribution(shadow)
            self.assertEqual(distribution,brute_force_distribution(shadow))
            self.assertEqual(distribution.total,2**sum(shadow))

    def test_oracle_random(self):
        """Test random shadows with up to 14 crossings."""

        for shadow in random_shadows(30,max_crossing=14,max_length=6):
            self.assertEqual(resultant_distribution(shadow),brute_force_distribution(shadow),'Shadow {}'.format(shadow))

    def test_distinct(self):
        """Test distinct resultant sets."""

        self.assertEqual(len(resultant_set([2,2,2,2])),11)
        self.assertLessEqual(len(resultant_set([3,2],nonnegative_lead=True)),max_unique_resultants([3,2]))
        self.assertEqual(resultant_set([2]),{UNLINK,classify([2]).identified()})
        self.assertTrue(is_resultant([3,2],[3]))
        self.assertTrue(is_resultant([3,2],[-3]))
        self.assertFalse(is_resultant([2],[3]))
        self.assertTrue(is_resultant([2,2],[2,2]))
        self.assertFalse(is_resultant([2,2],[5]))
        self.assertTrue(is_resultant([2,2,1,2],class_from_fraction(ProjectiveRational(9,4))))

    def test_probabilities(self):
        """Test exact probabilities."""

        probabilities = resultant_distribution([2]).probabilities()
        self.assertEqual(probabilities[UNLINK],Fraction(1,2))
        self.assertEqual(sum(probabilities.values()),1)

    def test_records(self):
        """Test record order and fields."""

        records = resultant_distribution([3]).to_records()
        self.assertEqual([record['crossing'] for record in records],[0,3,3])
        self.assertEqual(records[0]['count'],6)
        self.assertEqual(records[0]['probability'],'3/4')

    def test_codimension(self):
        """Test resultant counts a few crossings below the shadow."""

        self.assertEqual(codim_resultant_count([3,2],0),1)
        self.assertEqual(codim_resultant_count([2,1,1,1,2],1),2)
        self.assertLessEqual(codim_resultant_count([2,2,1,2],2),7)
        with self.assertRaises(NonCanonicalShadow):
            codim_resultant_count([1,2],1)

    def test_heredity(self):
        """Test that growing a region by two keeps every resultant."""

        for shadow in random_shadows(20,max_crossing=9):
            found = resultant_set(shadow)
            for position in range(len(shadow)):
                grown = list(shadow)
                grown[position] += 2
                self.assertTrue(found <= resultant_set(grown))

    def test_denominator(self):
        """Test that D[3' 2'] is four copies of N[3']."""

        closure = denominator_distribution([3,2])
        numerator = resultant_distribution([3])
        self.assertEqual(closure.total,2**5)
        for link,count in closure.counts.items():
            self.assertEqual(count,4*numerator.counts[link])

        self.assertEqual(denominator_distribution([5]).counts,{UNKNOT:32})

    def test_errors(self):
        """Test invalid shadows and the brute force limit."""

        for shadow in ([2,0],[2,-1],[]):
            with self.assertRaises(RatfertError):
                check_shadow(shadow)

        with self.assertRaises(LimitExceeded):
            brute_force_distribution([21])
        with self.assertRaises(LimitExceeded):
            brute_force_distribution([3,3],crossing_limit=5)

if __name__ == '__main__':
    logging.debug('test')
    runner = unittest.TextTestRunner()
    runner.run(suite())

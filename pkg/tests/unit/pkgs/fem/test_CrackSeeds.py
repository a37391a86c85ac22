from unittest import TestCase

import math

import numpy as np

import os
import sys

sys.path.append(os.path.abspath('./src'))

from pkgs.data.enumerators import SeedKind                      # noqa: E402
from pkgs.data.errors import ConfigError                        # noqa: E402
from pkgs.fem.crackSeeds import CrackSeed, applySeeds, \
    seedSupport                                                 # noqa: E402
from pkgs.fem.meshGenerators import rectangleMesh               # noqa: E402
from pkgs.fem.simulationState import SimulationState            # noqa: E402


class TestCrackSeed(TestCase):
    """
    CrackSeed class test cases.
    """
    def test_fromDict(self) -> None:
        """
        The fromDict method must read the geometric fields.
        """
        seed = CrackSeed.fromDict({'kind': 'segment', 'start': [0, 0.5],
                                   'end': [0.5, 0.5], 'half_width': 0.01})
        self.assertEqual(SeedKind.SEGMENT, seed.kind)
        self.assertEqual((0.0, 0.5), seed.start)
        self.assertEqual((0.5, 0.5), seed.end)
        self.assertEqual(0.01, seed.halfWidth)
        self.assertIsNone(seed.direction)

    def test_fromDictUnknownKind(self) -> None:
        """
        The fromDict method must reject an unknown kind.
        """
        with self.assertRaises(ConfigError) as context:
            CrackSeed.fromDict({'kind': 'notch'})
        self.assertEqual("Unknown seed kind 'notch'.", str(context.exception))

    def test_fromDictUnknownKey(self) -> None:
        """
        The fromDict method must reject an unknown key.
        """
        with self.assertRaises(ConfigError) as context:
            CrackSeed.fromDict({'kind': 'disk', 'diameter': 1.0})
        self.assertEqual("Unknown seed key 'diameter'.",
                         str(context.exception))

    def test_fromDictMalformedPoint(self) -> None:
        """
        The fromDict method must reject a point without two coordinates.
        """
        with self.assertRaises(ConfigError):
            CrackSeed.fromDict({'kind': 'disk', 'centre': [0.5]})


class TestSeedSupport(TestCase):
    """
    seedSupport function test cases.
    """
    def setUp(self) -> None:
        """
        Test setup.
        """
        self.points = np.array([[0.25, 0.5], [0.25, 0.6], [0.75, 0.5],
                                [0.5, 0.9]])

    def test_segment(self) -> None:
        """
        The seedSupport function must select the nodes near a segment with
        the normal perpendicular to it.
        """
        seed = CrackSeed(SeedKind.SEGMENT, start=(0.0, 0.5), end=(0.5, 0.5),
                         halfWidth=0.05)
        mask, directions = seedSupport(seed, self.points, 0.2)
        np.testing.assert_array_equal([True, False, False, False], mask)
        np.testing.assert_allclose(directions[0], [0.0, 1.0])

    def test_segmentDefaultHalfWidth(self) -> None:
        """
        The seedSupport function must default the half-width to epsilon.
        """
        seed = CrackSeed(SeedKind.SEGMENT, start=(0.0, 0.5), end=(0.5, 0.5))
        mask, _ = seedSupport(seed, self.points, 0.2)
        np.testing.assert_array_equal([True, True, False, False], mask)

    def test_arc(self) -> None:
        """
        The seedSupport function must give arcs the radial normal.
        """
        seed = CrackSeed(SeedKind.ARC, centre=(0.5, 0.5), radius=0.4,
                         startAngle=0.0, endAngle=math.pi, halfWidth=0.01)
        mask, directions = seedSupport(seed, self.points, 0.2)
        np.testing.assert_array_equal([False, False, False, True], mask)
        np.testing.assert_allclose(directions[3], [0.0, 1.0])

    def test_disk(self) -> None:
        """
        The seedSupport function must select the nodes inside a disk with the
        given direction.
        """
        seed = CrackSeed(SeedKind.DISK, centre=(0.25, 0.5), radius=0.15,
                         direction=(1.0, 0.0))
        mask, directions = seedSupport(seed, self.points, 0.2)
        np.testing.assert_array_equal([True, True, False, False], mask)
        np.testing.assert_allclose(directions[1], [1.0, 0.0])

    def test_zeroDirection(self) -> None:
        """
        The seedSupport function must reject a zero direction.
        """
        seed = CrackSeed(SeedKind.DISK, radius=0.1, direction=(0.0, 0.0))
        with self.assertRaises(ConfigError) as context:
            seedSupport(seed, self.points, 0.2)
        self.assertEqual("Seed direction must be non-zero.",
                         str(context.exception))


class TestApplySeeds(TestCase):
    """
    applySeeds function test cases.
    """
    def setUp(self) -> None:
        """
        Test setup.
        """
        self.state = SimulationState.reference(rectangleMesh(1.0, 1.0, 8, 8))

    def test_applySeedsSegment(self) -> None:
        """
        The applySeeds function must freeze the support at unit damage and
        leave the input state untouched.
        """
        seed = CrackSeed(SeedKind.SEGMENT, start=(0.0, 0.5), end=(0.5, 0.5),
                         halfWidth=0.01)
        seeded = applySeeds(self.state, [seed], 0.1)
        self.assertEqual(5, int(seeded.frozen.sum()))
        np.testing.assert_array_equal(seeded.d[seeded.frozen],
                                      [[0.0, 1.0]] * 5)
        np.testing.assert_array_equal(seeded.frozenDirection[seeded.frozen],
                                      [[0.0, 1.0]] * 5)
        self.assertFalse(self.state.frozen.any())
        self.assertEqual(0.0, float(np.abs(self.state.d).max()))
        seeded.checkInvariants()

    def test_applySeedsDiskHalo(self) -> None:
        """
        The applySeeds function must seed a decaying unfrozen halo around a
        disk.
        """
        seed = CrackSeed(SeedKind.DISK, centre=(0.5, 0.5), radius=0.1,
                         direction=(0.0, 1.0))
        seeded = applySeeds(self.state, [seed], 0.1)
        magnitude = seeded.damageMagnitude()
        distance = np.linalg.norm(self.state.mesh.nodes - 0.5, axis=1)
        self.assertTrue(np.all(seeded.frozen == (distance <= 0.1)))
        halo = ~seeded.frozen & (magnitude > 0.0)
        self.assertTrue(halo.any())
        np.testing.assert_allclose(
            magnitude[halo], np.exp(-(distance[halo] - 0.1) / 0.1))
        self.assertTrue(np.all(magnitude[halo] < 1.0))
        self.assertTrue(np.all(magnitude[~seeded.frozen & ~halo] == 0.0))

from unittest import TestCase
from unittest.mock import mock_open, patch

import numpy as np

import os
import sys
import tempfile

sys.path.append(os.path.abspath('./src'))

from pkgs.fem.checkpoint import loadCheckpoint, \
    saveCheckpoint                                              # noqa: E402
from pkgs.fem.meshGenerators import rectangleMesh               # noqa: E402
from pkgs.fem.simulationState import SimulationState            # noqa: E402


class TestCheckpoint(TestCase):
    """
    saveCheckpoint and loadCheckpoint function test cases.
    """
    def test_restore(self) -> None:
        """
        The loadCheckpoint function must restore a saved state exactly.
        """
        state = SimulationState.reference(rectangleMesh(1.0, 1.0, 2, 2))
        state.y = state.y * 1.1
        state.d[3] = [0.0, 1.0]
        state.frozen[3] = True
        state.frozenDirection[3] = [0.0, 1.0]
        state.lowerBounds[:, 0] = 0.0
        state.step = 12
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'checkpoint.fqr')
            saveCheckpoint(state, path)
            restored = loadCheckpoint(path)
        np.testing.assert_array_equal(state.mesh.nodes, restored.mesh.nodes)
        np.testing.assert_array_equal(state.mesh.triangles,
                                      restored.mesh.triangles)
        self.assertEqual(list(state.mesh.boundaryTags),
                         list(restored.mesh.boundaryTags))
        for name in ('y', 'd', 'frozen', 'frozenDirection', 'lowerBounds'):
            np.testing.assert_array_equal(getattr(state, name),
                                          getattr(restored, name))
        self.assertEqual(12, restored.step)

    @patch("builtins.open", new_callable=mock_open, read_data=b"PK\x03\x04")
    def test_notCheckpoint(self, mockFile) -> None:
        """
        The loadCheckpoint function must reject a file without the magic
        bytes.
        """
        with self.assertRaises(ValueError) as context:
            loadCheckpoint('state.npz')
        self.assertEqual("state.npz is not a checkpoint file.",
                         str(context.exception))

    @patch("builtins.open", new_callable=mock_open,
           read_data=b"FQRCKPT\x02rest")
    def test_version(self, mockFile) -> None:
        """
        The loadCheckpoint function must reject an unknown version.
        """
        with self.assertRaises(ValueError) as context:
            loadCheckpoint('checkpoint.fqr')
        self.assertEqual("Unsupported checkpoint version 2.",
                         str(context.exception))

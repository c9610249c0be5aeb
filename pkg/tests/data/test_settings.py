# @Copyright: CEA-LIST/DIASI/SIALV/LVA (2023)
# @Author: CEA-LIST/DIASI/SIALV/LVA <pixano@cea.fr>
# @License: CECILL-C
#
# This software is a collaborative computer program whose purpose is to
# detect and characterize transient changes in sequential data streams.
# This software is governed by the CeCILL-C license under French law and
# abiding by the rules of distribution of free software. You can use,
# modify and/ or redistribute the software under the terms of the CeCILL-C
# license as circulated by CEA, CNRS and INRIA at the following URL
#
# http://www.cecill.info

import os
import unittest
from unittest import mock

from changewatch.data import Settings


class SettingsTestCase(unittest.TestCase):
    """Settings test case"""

    def test_init(self):
        """Test Settings init method"""

        default_settings = Settings()
        custom_settings = Settings(reps=500, n_jobs=-1)

        self.assertEqual(default_settings.reps, 10_000)
        self.assertEqual(default_settings.seed, 0)
        self.assertEqual(custom_settings.reps, 500)
        self.assertEqual(custom_settings.n_jobs, -1)

    def test_environment(self):
        """Test Settings environment overrides"""

        environment = {"CHANGEWATCH_GRID_SIZE": "2048", "CHANGEWATCH_PROGRESS": "false"}
        with mock.patch.dict(os.environ, environment):
            settings = Settings()

        self.assertEqual(settings.grid_size, 2048)
        self.assertFalse(settings.progress)

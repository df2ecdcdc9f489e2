import importlib
import unittest
from unittest import mock

from qform_pipeline.tasks import check_ratio_trend, check_ratio_window

WINDOW_MODULE = importlib.import_module("qform_pipeline.tasks.check_ratio_window")

TREND_MODULE = importlib.import_module("qform_pipeline.tasks.check_ratio_trend")


class TestCheckRatioWindow(unittest.TestCase):
    def test_check_ratio_window(self):
        parameters = [(1.0, True), (0.95, True), (1.2, False), (0.5, False), (None, False)]

        for ratio, expected in parameters:
            with self.subTest(ratio=ratio):
                with mock.patch.object(WINDOW_MODULE, "get_run_logger") as logger:
                    self.assertEqual(
                        expected, check_ratio_window.fn(ratio, (0.9, 1.1), "theorem1")
                    )
                    self.assertEqual(not expected, logger.return_value.warning.called)


class TestCheckRatioTrend(unittest.TestCase):
    def test_check_ratio_trend(self):
        parameters = [([3.0, 2.0, 1.0], True), ([1.0, 1.0], True), ([1.0, 2.0, 0.5], False)]

        for values, expected in parameters:
            with self.subTest(values=values):
                with mock.patch.object(TREND_MODULE, "get_run_logger") as logger:
                    self.assertEqual(expected, check_ratio_trend.fn(values, "level"))
                    self.assertEqual(not expected, logger.return_value.warning.called)


if __name__ == "__main__":
    unittest.main()

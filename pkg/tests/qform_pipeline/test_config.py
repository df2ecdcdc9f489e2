import importlib
import io
import os
import tempfile
import unittest
from contextlib import redirect_stdout

from qform_pipeline.__config__ import (
    display_config,
    make_config_from_dotlist,
    make_config_from_file,
)
from qform_pipeline.errors import ValidationError

REDUCE_FORM = importlib.import_module("qform_pipeline.flows.reduce_form")

RUN_EXPERIMENT = importlib.import_module("qform_pipeline.flows.run_experiment")

CONFIG_FILE = """
context:
  working_location: /tmp
series:
  name: demo
  unused: 1
parameters:
  form: [2, 1, 3]
  X: 500
  experiments: [level, bilinear]
"""


class TestConfig(unittest.TestCase):
    def test_make_config_from_dotlist(self):
        args = ["parameters.form=4,5,3", "context.working_location=/tmp", "series.name=demo"]

        config = make_config_from_dotlist(REDUCE_FORM, args)

        self.assertEqual("4,5,3", config.parameters.form)
        self.assertEqual("/tmp", config.context.working_location)
        self.assertEqual("demo", config.series.name)

    def test_make_config_from_dotlist_invalid_form_raises(self):
        args = ["parameters.form=4,5", "context.working_location=/tmp", "series.name=demo"]

        with self.assertRaises(ValidationError):
            make_config_from_dotlist(REDUCE_FORM, args)

    def test_make_config_from_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "demo.yaml")

            with open(path, "w", encoding="utf-8") as file:
                file.write(CONFIG_FILE)

            config = make_config_from_file(RUN_EXPERIMENT, path)

        self.assertEqual("2,1,3", config.parameters.form)
        self.assertEqual(500, config.parameters.X)
        self.assertEqual(["level", "bilinear"], list(config.parameters.experiments))
        self.assertNotIn("unused", config.series)

    def test_make_config_from_file_missing_group_raises(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "demo.yaml")

            with open(path, "w", encoding="utf-8") as file:
                file.write("context:\n  working_location: /tmp\n")

            with self.assertRaises(ValidationError):
                make_config_from_file(REDUCE_FORM, path)

    def test_display_config_keeps_lists_inline(self):
        args = [
            "parameters.experiments=[level,bilinear]",
            "context.working_location=/tmp",
            "series.name=demo",
        ]
        config = make_config_from_dotlist(RUN_EXPERIMENT, args)
        output = io.StringIO()

        with redirect_stdout(output):
            display_config(config)

        lines = output.getvalue().splitlines()
        self.assertIn("parameters:", lines)
        self.assertIn("  experiments: [level, bilinear]", lines)
        self.assertIn("  working_location: /tmp", lines)


if __name__ == "__main__":
    unittest.main()

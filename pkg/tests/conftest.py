import os
import sys

from hypothesis import settings

# keep hypothesis deterministic and quiet in CI-style runs
settings.register_profile("suite", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("suite")

sys.path.insert(0, os.path.join(os.path.dirname(__file__), os.pardir, "src"))

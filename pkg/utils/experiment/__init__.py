"""
Experiment harness: configuration, batch runs and output files.
"""

from utils.experiment.config import ExperimentConfig, experiment_from_dict, load_experiment_config
from utils.experiment.batch import InstanceOutcome, instance_seeds, run_batch, run_instance
from utils.experiment.output_operations import (
    instances_frame,
    popularity_frequency,
    save_experiment_outputs,
    summary_frame,
    sweep_frame,
    truncation_frame,
)

__all__ = [
    'ExperimentConfig',
    'experiment_from_dict',
    'load_experiment_config',
    'InstanceOutcome',
    'instance_seeds',
    'run_batch',
    'run_instance',
    'instances_frame',
    'popularity_frequency',
    'save_experiment_outputs',
    'summary_frame',
    'sweep_frame',
    'truncation_frame',
]

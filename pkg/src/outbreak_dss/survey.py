"""Calibration dataset from the USS Theodore Roosevelt outbreak survey.

382 crew members volunteered for the April 2020 investigation, 238 of
them infected. The figures usually circulate as rounded percentages;
this module keeps the underlying integer counts, because rates derived
from the counts reproduce every published table cell at its printed
precision while the rounded percentages drift by up to a few 1e-4 after
arithmetic. The demographic attack rates are the exception: they are
kept as the published three-decimal rates, which is what the
vulnerability table is calibrated against.
"""

from __future__ import annotations

TOTAL = 382      # survey volunteers
INFECTED = 238   # volunteers with a positive or presumed-positive result

# behavior, volunteers reporting it, infected among them, infected among the rest
BEHAVIOR_COUNTS: tuple[tuple[str, int, int, int], ...] = (
    ("HandWash", 351, 218, 20),
    ("HandSanitizer", 356, 219, 19),
    ("AvoidCommonAreas", 145, 78, 160),
    ("FaceCover", 283, 158, 80),
    ("WorkspaceCleaning", 307, 195, 43),
    ("BerthCleaning", 252, 156, 82),
    ("KeepingDistance", 192, 105, 133),
)

AGE_BANDS = ("18-24", "25-29", "30-39", "40-59")
AGE_COUNTS = {"18-24": 113, "25-29": 78, "30-39": 148, "40-59": 43}
# published attack rate per age band (infected fraction of the band)
AGE_RATES = {"18-24": 0.681, "25-29": 0.641, "30-39": 0.588, "40-59": 0.558}

GENDERS = ("male", "female")
GENDER_COUNTS = {"male": 289, "female": 93}
GENDER_RATES = {"male": 0.657, "female": 0.516}

# self-reported symptom counts, bucketed; rows condition on infection status
SYMPTOM_LEVELS = ("0", "1-3", "4-5", "6-8", ">8")
SYMPTOMS_NOT_INFECTED = (54, 49, 13, 16, 12)   # sums to 144
SYMPTOMS_INFECTED = (44, 51, 37, 50, 56)       # sums to 238

# swab test outcomes against final case status
TEST_FP, TEST_TN = 16, 131   # among 147 never-infected
TEST_FN, TEST_TP = 23, 212   # among 235 infected at testing time

# ship-level context, useful as CLI defaults and in examples
CREW = 4779
CONFIRMED_CASES = 1417

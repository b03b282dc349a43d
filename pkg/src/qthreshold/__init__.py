"""qthreshold: exact and Monte Carlo study of maximum-likelihood decoding
thresholds for linear codes on the q-ary symmetric channel."""

__version__ = "0.1.0"

from .algebra import (FieldSpec, Word, distance, field_op, get_field,
                      precedes, substitute, support, weight, word, zero_word)
from .channel import (NoiseSpec, hoeffding_radius, make_rng,
                      sample_erasure_pattern, sample_noisy, stream_seed,
                      vector_probability, weight_probabilities)
from .codes import (LinearCode, augment_e1, dump_code, from_generator,
                    hamming_7_4, is_list_decodable, load_code, min_distance,
                    parse_code_spec, random_code, repetition_code,
                    trivial_code)
from .decode import (DecodeResult, erasure_candidates, in_omega,
                     list_decode_ball, ml_decode, omega_table,
                     omega_translate_check, randomized_list_decode)
from .errors import EnumerationCapError, MonotonicityError, ValidationError
from .iso import (IndicatorFn, delta, enumerate_monotone, exact_moments,
                  expectation_derivative, h_value, is_monotone_decreasing,
                  is_monotone_increasing, omega_indicator, verify_iso,
                  verify_russo, verify_talagrand)
from .results import (AmbiguityEstimate, DeltaBoundReport, FailureRow,
                      GBoundReport, MainBoundReport, Moments, Verdict,
                      VerifyEntry)
from .threshold import (CurveRow, ThresholdCurve, e1_augmentation_failure,
                        erasure_ambiguity, list_success_exact, q_ary_entropy,
                        success_exact, success_mc, success_probability,
                        threshold_envelope, verify_delta_bound, verify_gbound,
                        verify_largesupport, verify_main_bound)

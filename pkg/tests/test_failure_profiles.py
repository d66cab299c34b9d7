# -*- coding: utf-8 -*-

"""
healsim
Architectural self-healing simulator
----------------------------------------------------------------------------
(C) direct Netware Group - All rights reserved

The following license agreement remains valid unless any additions or
changes are being made by direct Netware Group in a written form.

This program is free software; you can redistribute it and/or modify it
under the terms of the GNU General Public License as published by the
Free Software Foundation; either version 2 of the License, or (at your
option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT
ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or
FITNESS FOR A PARTICULAR PURPOSE. See the GNU General Public License for
more details.

You should have received a copy of the GNU General Public License along with
this program; if not, write to the Free Software Foundation, Inc.,
51 Franklin Street, Fifth Floor, Boston, MA 02110-1301, USA.
----------------------------------------------------------------------------
https://www.direct-netware.de/redirect?licenses;gpl
----------------------------------------------------------------------------
"""

from collections import Counter

from numpy.random import default_rng
import numpy
import pytest

from dNG.runtime.io_exception import IOException
from dNG.runtime.value_exception import ValueException

from healsim.data.architecture.failure_kind import FailureKind
from healsim.data.failure_profiles.distribution import Distribution
from healsim.data.failure_profiles.failure_profile_model import FailureProfileModel
from healsim.data.failure_profiles.failure_profiles import FailureProfiles
from healsim.data.failure_profiles.failure_trace import FailureTrace
from healsim.data.failure_profiles.failure_trace_entry import FailureTraceEntry
from healsim.data.failure_profiles.profile_variants import ProfileVariants
from healsim.data.failure_profiles.trace_generator import TraceGenerator
from healsim.runtime.insufficient_tail_samples_exception import InsufficientTailSamplesException

def _create_base_trace(group_sizes, iat = 2000.0):
    bursts = [ ( index * iat, size ) for index, size in enumerate(group_sizes) ]
    entries = [ FailureTraceEntry(start, FailureKind.CF1, 0.5) for start, size in bursts for _ in range(size) ]

    return FailureTrace(entries, len(group_sizes) * iat, "base", 0, [ ( "fet_s", "250.0" ) ], bursts)
#

def test_synthetic_trace():
    trace = TraceGenerator.generate_synthetic(10, 4, 5.0, 3)

    assert trace.get_density() == 40
    assert trace.get_group_sizes() == [ 10 ] * 4
    assert trace.get_burst_starts() == [ 0.0, 5.0, 10.0, 15.0 ]
    assert trace.duration == 20.0
    assert sorted(Counter(entry.cf_kind for entry in trace).values()) == [ 13, 13, 14 ]

    for entry in trace: assert 0 <= entry.target_selector < 1
#

def test_synthetic_trace_rejects_invalid_parameters():
    with pytest.raises(ValueException): TraceGenerator.generate_synthetic(0, 4, 5.0)
    with pytest.raises(ValueException): TraceGenerator.generate_synthetic(1, 4, -1.0)
    with pytest.raises(ValueException): TraceGenerator.generate_synthetic(1, 4, 5.0, cf_kinds = ( "CF7", ))
#

@pytest.mark.parametrize("name, density", [ ( "lri", 318 ), ( "deug", 666 ), ( "grid5000", 1116 ) ])
def test_preset_traces_have_exact_density(name, density):
    trace = FailureProfiles.generate(name, 1)
    profile = FailureProfiles.get_profile(name)

    assert trace.get_density() == density
    assert sum(trace.get_group_sizes()) == density
    assert len(trace.bursts) == profile.burst_count
    assert trace.entries[-1].time <= trace.duration
    assert trace.get_burst_starts()[-1] == pytest.approx(profile.duration - profile.fet)
#

def test_group_failures_stay_within_event_window():
    trace = FailureProfiles.generate("lri", 2)
    times = numpy.array([ entry.time for entry in trace ])
    starts = numpy.array(trace.get_burst_starts())

    assert numpy.all(times >= starts[0])
    assert numpy.all(times <= starts[-1] + FailureProfiles.PRESETS['lri']['fet'])
#

def test_generation_is_deterministic():
    assert FailureProfiles.generate("deug", 5).export() == FailureProfiles.generate("deug", 5).export()
    assert FailureProfiles.generate("deug", 5).export() != FailureProfiles.generate("deug", 6).export()
#

def test_trace_export_and_import():
    trace = FailureProfiles.generate("lri", 4)
    imported = FailureTrace.import_csv(trace.export())

    assert imported.name == "lri"
    assert imported.seed == 4
    assert imported.duration == trace.duration
    assert imported.bursts == trace.bursts
    assert imported.get_parameter("fgs") == trace.get_parameter("fgs")
    assert imported.export() == trace.export()
#

def test_trace_import_with_pinned_entries():
    trace = FailureTrace.import_csv("time_s,cf_kind,target_selector\n1.5,CF4,id:K0000.03\n0.5,CF1,0.25\n")

    assert trace.duration == 1.5
    assert [ entry.time for entry in trace ] == [ 0.5, 1.5 ]
    assert trace.entries[1].get_pinned_id() == "K0000.03"
    assert trace.entries[0].target_selector == 0.25
#

def test_trace_import_rejects_malformed_data():
    with pytest.raises(IOException): FailureTrace.import_csv("1.0,CF1,0.5\n")
    with pytest.raises(IOException): FailureTrace.import_csv("time_s,cf_kind,target_selector\n1.0,CF1,1.5\n")
    with pytest.raises(IOException): FailureTrace.import_csv("time_s,cf_kind,target_selector\n1.0,CF8,0.5\n")
#

def test_trace_file_round_trip(tmp_path):
    trace = TraceGenerator.generate_synthetic(2, 3, 1.0)
    file_path_name = str(tmp_path / "trace.csv")

    trace.write_csv(file_path_name)

    assert FailureTrace.read_csv(file_path_name).export() == trace.export()
    with pytest.raises(IOException): FailureTrace.read_csv(str(tmp_path / "missing.csv"))
#

def test_single_variant():
    base_trace = FailureProfiles.generate("grid5000", 0)
    profile = ProfileVariants.derive_single_variant(base_trace)

    assert profile.fgs == Distribution.constant(1)
    assert profile.burst_count == 1116
    assert round(profile.iat.get_mean(), 1) == 77.4

    trace = FailureProfiles.generate("single", 0)
    iats = numpy.diff(trace.get_burst_starts())

    assert trace.get_density() == 1116
    assert set(trace.get_group_sizes()) == { 1 }
    assert numpy.allclose(iats, 86400.0 / 1116)
#

def test_uniform_variant():
    base_trace = FailureProfiles.generate("grid5000", 0)
    profile = ProfileVariants.derive_uniform_variant(base_trace, 0)

    assert profile.name == "uniform"
    assert profile.fgs.kind == Distribution.KIND_NORMAL
    assert profile.fgs.get_mean() == pytest.approx(numpy.mean(base_trace.get_group_sizes()), rel = 0.05)
    assert profile.iat == Distribution.constant(1728.0)
    assert profile.burst_count == len(base_trace.bursts)

    trace = TraceGenerator.generate_realistic(profile, 0)

    assert trace.get_density() == 1116
    assert len(trace.bursts) == len(base_trace.bursts)
    assert numpy.allclose(numpy.diff(trace.get_burst_starts()), trace.get_burst_starts()[1] - trace.get_burst_starts()[0])
#

def test_bigburst_variant():
    base_trace = _create_base_trace([ 150, 4, 250, 2, 6 ])
    profile = ProfileVariants.derive_bigburst_variant(base_trace, 1)

    assert profile.fgs.kind == Distribution.KIND_NORMAL
    assert 150 <= profile.fgs.get_mean() <= 250
    assert profile.burst_count == 2

    trace = TraceGenerator.generate_realistic(profile, 1)

    assert trace.get_density() == base_trace.get_density()
    assert len(trace.bursts) == 2
    assert trace.name == "bigburst"
#

def test_bigburst_variant_requires_tail_samples():
    with pytest.raises(InsufficientTailSamplesException): ProfileVariants.derive_bigburst_variant(_create_base_trace([ 5, 8, 12 ]))
#

def test_variants_require_failure_groups():
    trace = FailureTrace([ FailureTraceEntry(0.0, FailureKind.CF1, 0.1) ], 1.0)
    with pytest.raises(ValueException): ProfileVariants.derive_single_variant(trace)
#

def test_lognormal_shape():
    samples = Distribution.lognormal(1.88, 1.25).sample(default_rng(9), 100000)
    logs = numpy.log(samples)

    assert logs.mean() == pytest.approx(1.88, rel = 0.1)
    assert logs.std() == pytest.approx(1.25, rel = 0.1)
#

def test_distribution_parsing():
    assert Distribution.parse("LOGN(1.32, 0.77)") == Distribution.lognormal(1.32, 0.77)
    assert Distribution.parse("n(5,2)") == Distribution.normal(5.0, 2.0)
    assert Distribution.parse("7") == Distribution.constant(7.0)
    with pytest.raises(ValueException): Distribution.parse("LOGN(a,b)")
#

def test_group_size_normalization():
    sizes = TraceGenerator.normalize_group_sizes([ 1, 3, 7, 2 ], 31)

    assert sizes.sum() == 31
    assert sizes.min() >= 1
    with pytest.raises(ValueException): TraceGenerator.normalize_group_sizes([ 1, 1, 1 ], 2)
#

def test_unknown_profile():
    with pytest.raises(ValueException): FailureProfiles.generate("sunspots")
    assert FailureProfiles.get_names() == [ "lri", "deug", "grid5000", "uniform", "single", "bigburst" ]
#

@pytest.mark.parametrize("fgs", [ Distribution.lognormal(1.32, 0.77),
                                  Distribution.lognormal(2.15, 0.70),
                                  Distribution.lognormal(1.88, 1.25),
                                  Distribution.normal(22.85, 20.68),
                                  Distribution.normal(238.0, 97.3)
                                ])
def test_group_size_samples_reproduce_parameters(fgs):
    profile = FailureProfileModel("sampled", fgs, Distribution.constant(1728.0), 250.0, 50, 86400.0)
    samples = profile.fgs.sample(default_rng(17), 10000)

    if (fgs.kind == Distribution.KIND_LOGNORMAL): samples = numpy.log(samples)

    assert samples.mean() == pytest.approx(fgs.parameters[0], rel = 0.1)
    assert samples.std() == pytest.approx(fgs.parameters[1], rel = 0.1)
#

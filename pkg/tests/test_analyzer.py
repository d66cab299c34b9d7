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

import pytest

from dNG.runtime.value_exception import ValueException

from healsim.analysis.analyzer import Analyzer
from healsim.analysis.annotations import Annotations
from healsim.data.architecture.architecture_model import ArchitectureModel
from healsim.data.architecture.failure_kind import FailureKind

def _assert_annotations_track_issue_oracle(model, schedule, runs):
    analyzer = Analyzer()
    annotations = Annotations(1000)

    for _ in range(runs):
        changes = [ ]
        for _ in range(3): changes += schedule.step(annotations)

        analyzer.analyze(annotations, changes, model)

        assert set(issue.key for issue in annotations.get_issues()) == set(Analyzer.issue_oracle(model))
    #
#

def test_analyzer_detects_injected_failures(model):
    events = model.inject_failure(FailureKind.CF3, model.shops[0].components[2], 0.0)
    events += model.inject_failure(FailureKind.CF4, model.shops[0].connectors[0], 0.0)

    annotations = Analyzer().analyze(Annotations(10), events, model)

    assert set(issue.kind for issue in annotations.get_issues()) == { FailureKind.CF3, FailureKind.CF4 }
    assert [ issue.id for issue in annotations.get_issues() ] == [ "I1", "I2" ]
#

def test_analyzer_drops_repaired_issues(model):
    analyzer = Analyzer()
    annotations = Annotations(10)

    component = model.shops[0].components[8]
    analyzer.analyze(annotations, model.inject_failure(FailureKind.CF1, component, 0.0), model)

    assert len(annotations) == 1

    analyzer.analyze(annotations, model.restart_component(component, 1.0), model)

    assert len(annotations) == 0
#

def test_annotations_track_issue_oracle(model_3_shops, random_schedule):
    _assert_annotations_track_issue_oracle(model_3_shops, random_schedule(model_3_shops, 2), 50)
#

@pytest.mark.slow
@pytest.mark.parametrize("seed", range(1000))
def test_annotations_track_issue_oracle_on_random_models(random_schedule, seed):
    model = ArchitectureModel.build(1 + seed % 10, seed)
    _assert_annotations_track_issue_oracle(model, random_schedule(model, seed), 10)
#

def test_annotations_keep_top_k_by_ratio(model, random_schedule):
    schedule = random_schedule(model, 4, 1.0)
    for _ in range(6): schedule.inject()

    annotations = Annotations(2)
    rule_matches = [ ]

    for issue in schedule.get_issues():
        for template in schedule.templates:
            rule_match = template.create_rule_match(model, issue)
            if (rule_match is not None): rule_matches.append(rule_match)
        #
    #

    for rule_match in rule_matches: annotations.add_best_rule(rule_match)

    expected = sorted(rule_matches, key = lambda rule_match: -1 * rule_match.ratio)[:2]
    assert [ rule_match.ratio for rule_match in annotations.get_best_rules() ] == [ rule_match.ratio for rule_match in expected ]
#

def test_annotations_reject_invalid_k():
    with pytest.raises(ValueException): Annotations(0)
#

def test_analyzer_is_idempotent(model_3_shops, random_schedule):
    schedule = random_schedule(model_3_shops, 6, 1.0)

    changes = [ ]
    for _ in range(20): changes += schedule.step()

    analyzer = Analyzer()
    annotations = analyzer.analyze(Annotations(1000), changes, model_3_shops)
    issue_ids = [ issue.id for issue in annotations.get_issues() ]

    analyzer.analyze(annotations, changes, model_3_shops)

    assert len(issue_ids) > 0
    assert [ issue.id for issue in annotations.get_issues() ] == issue_ids
#

def test_analyzer_work_is_bounded_by_issues_and_changes(model_3_shops, random_schedule):
    analyzer = Analyzer()
    annotations = Annotations(1000)
    schedule = random_schedule(model_3_shops, 7)

    for _ in range(40):
        changes = [ ]
        for _ in range(3): changes += schedule.step(annotations)

        bound = len(annotations) + sum(len(Analyzer.RELEVANT_PATTERNS.get(change.kind, ( ))) for change in changes)
        match_attempts = analyzer.match_attempts

        analyzer.analyze(annotations, changes, model_3_shops)

        assert analyzer.match_attempts - match_attempts <= bound
    #
#

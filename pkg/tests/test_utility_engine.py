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
from healsim.analysis.issue import Issue
from healsim.data.architecture.architecture_model import ArchitectureModel
from healsim.data.architecture.failure_kind import FailureKind
from healsim.data.utility.utility_engine import UtilityEngine
from healsim.data.utility.utility_ledger import UtilityLedger
from healsim.data.utility.utility_patterns import UtilityPatterns
from healsim.planning.rule_templates import RuleTemplates
from healsim.runtime.invalid_rule_match_exception import InvalidRuleMatchException

def _u1(model, component):
    return UtilityEngine.u1(model, UtilityPatterns.get(UtilityPatterns.COMPONENT_UTILITY).match(model, component))
#

def _assert_incremental_matches_full_search(model, schedule, steps):
    engine = UtilityEngine(model)
    assert engine.initialize() == pytest.approx(UtilityEngine.total_utility(model), abs = 1e-9)

    for _ in range(steps):
        events = schedule.step()
        engine.process_events(events)

        assert engine.get_utility() == pytest.approx(UtilityEngine.total_utility(model), abs = 1e-9)
        assert set(engine.ledger.matches) == set(UtilityEngine.find_all_matches(model))
    #
#

def _assert_rule_impact_predicts_utility_change(model, schedule):
    for _ in range(30): schedule.step()

    templates = RuleTemplates.get_default()
    checked = 0

    for issue in schedule.get_issues():
        for template in templates:
            rule_match = template.create_rule_match(model, issue)
            if (rule_match is None): continue

            copy = model.clone()
            copy_issue = Issue("copy", Analyzer.issue_oracle(copy)[issue.key], copy)
            copy_rule_match = template.create_rule_match(copy, copy_issue)

            before = UtilityEngine.total_utility(copy)
            copy.apply_repair(copy_rule_match, 0.0)

            assert UtilityEngine.total_utility(copy) - before == pytest.approx(rule_match.utility_increase, abs = 1e-9)
            checked += 1
        #
    #

    assert checked > 0
#

def test_initial_utility_is_sum_of_component_utilities(model):
    expected = sum(_u1(model, component) for component in model.get_components())
    assert UtilityEngine(model).initialize() == pytest.approx(expected)
#

def test_failure_cancels_component_utility(model):
    engine = UtilityEngine(model)
    initial = engine.initialize()

    component = model.shops[0].components[14]
    delta = engine.process_events(model.inject_failure(FailureKind.CF1, component, 0.0))

    assert delta == pytest.approx(-1 * _u1(model, component))
    assert engine.get_utility() == pytest.approx(initial - _u1(model, component))
#

def test_connector_failure_costs_source_utility(model):
    engine = UtilityEngine(model)
    engine.initialize()

    connector = model.shops[0].connectors[0]
    delta = engine.process_events(model.inject_failure(FailureKind.CF4, connector, 0.0))

    assert delta == pytest.approx(-1 * connector.source.criticality * connector.source.get_reliability())
#

def test_cf2_cancels_component_utility(model):
    engine = UtilityEngine(model)
    engine.initialize()

    component = model.shops[0].components[4]
    events = model.inject_failure(FailureKind.CF2, component, 0.0)

    assert len(events) == 5
    assert engine.process_events(events) == pytest.approx(-1 * _u1(model, component))
#

def test_incremental_utility_matches_full_search(model_3_shops, random_schedule):
    _assert_incremental_matches_full_search(model_3_shops, random_schedule(model_3_shops, 1), 200)
#

@pytest.mark.slow
@pytest.mark.parametrize("seed", range(5))
def test_incremental_utility_matches_full_search_long(model_3_shops, random_schedule, seed):
    _assert_incremental_matches_full_search(model_3_shops, random_schedule(model_3_shops, seed), 1000)
#

@pytest.mark.slow
@pytest.mark.parametrize("seed", range(1000))
def test_incremental_utility_matches_full_search_on_random_models(random_schedule, seed):
    model = ArchitectureModel.build(1 + seed % 10, seed)
    _assert_incremental_matches_full_search(model, random_schedule(model, seed), 20)
#

def test_rule_impact_predicts_utility_change(model_3_shops, random_schedule):
    _assert_rule_impact_predicts_utility_change(model_3_shops, random_schedule(model_3_shops, 5, 1.0))
#

@pytest.mark.slow
@pytest.mark.parametrize("seed", range(100))
def test_rule_impact_predicts_utility_change_on_random_models(random_schedule, seed):
    model = ArchitectureModel.build(1 + seed % 10, seed)
    _assert_rule_impact_predicts_utility_change(model, random_schedule(model, seed, 1.0))
#

def test_rule_impact_rejects_stale_issue(model):
    component = model.shops[0].components[1]
    model.inject_failure(FailureKind.CF1, component, 0.0)

    issue = Issue("I1", Analyzer.issue_oracle(model)[( FailureKind.CF1, component.id )], model)
    rule_match = RuleTemplates.get(RuleTemplates.get_default(), "RESTART").create_rule_match(model, issue)

    model.restart_component(component, 1.0)

    with pytest.raises(InvalidRuleMatchException): UtilityEngine.rule_impact(model, rule_match)
#

def test_ledger_rejects_duplicates(model):
    matches = UtilityEngine.find_all_matches(model, UtilityPatterns.get_all()[:1])
    match = list(matches.values())[0]

    ledger = UtilityLedger()
    ledger.add(match)

    with pytest.raises(ValueException): ledger.add(match)

    ledger.remove(match)

    assert len(ledger) == 0
    assert ledger.total == 0.0
#

def test_u1_is_product_of_criticality_reliability_and_connectivity(model):
    component = model.shops[0].components[3]
    match = UtilityPatterns.get(UtilityPatterns.COMPONENT_UTILITY).match(model, component)

    assert UtilityEngine.u1(model, match) == pytest.approx(component.criticality * component.get_reliability() * component.get_connectivity())
    assert sum(_u1(model, component) for component in model.shops[0].components) == pytest.approx(UtilityEngine.total_utility(model))
#

def test_u2_negates_u1_of_failed_component(model):
    component = model.shops[0].components[6]
    u1 = _u1(model, component)

    model.inject_failure(FailureKind.CF2, component, 0.0)
    match = Analyzer.issue_oracle(model)[( FailureKind.CF2, component.id )]

    assert UtilityEngine.u2(model, match) == pytest.approx(-1 * u1)
    assert UtilityEngine.u1(model, match) == pytest.approx(u1)
#

def test_engines_own_their_patterns(model):
    engine = UtilityEngine(model)
    other_engine = UtilityEngine(model)

    assert not set(map(id, engine.patterns)) & set(map(id, other_engine.patterns))

    engine.initialize()

    assert sum(pattern.visits for pattern in engine.patterns) > 0
    assert sum(pattern.visits for pattern in other_engine.patterns) == 0
#

@pytest.mark.parametrize("shops", [ 1, 10 ])
def test_pattern_matching_visits_anchor_neighborhood_only(shops):
    model = ArchitectureModel.build(shops, 3)
    shop = model.shops[0]

    for pattern in UtilityPatterns.get_all():
        for component in shop.components:
            visits = pattern.visits
            pattern.match(model, component)

            assert pattern.visits - visits <= 2 + component.get_connectivity()
        #

        for connector in shop.connectors:
            visits = pattern.visits
            pattern.match(model, connector)

            assert pattern.visits - visits <= 2
        #
    #
#

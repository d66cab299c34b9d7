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

from numpy.random import default_rng
import pytest

from dNG.runtime.value_exception import ValueException

from healsim.analysis.analyzer import Analyzer
from healsim.analysis.annotations import Annotations
from healsim.analysis.issue import Issue
from healsim.data.architecture.architecture_model import ArchitectureModel
from healsim.data.architecture.failure_kind import FailureKind
from healsim.planning.calibrated_planning_time import CalibratedPlanningTime
from healsim.planning.oracle_planner import OraclePlanner
from healsim.planning.plan import Plan
from healsim.planning.planners import Planners
from healsim.planning.rule_templates import RuleTemplates
from healsim.planning.static_planner import StaticPlanner
from healsim.planning.udriven_planner import UdrivenPlanner
from healsim.runtime.invalid_rule_match_exception import InvalidRuleMatchException
from healsim.runtime.oracle_too_large_exception import OracleTooLargeException

def _create_failures(seed, failures, shops = 2):
    model = ArchitectureModel.build(shops, seed)
    random = default_rng(seed)

    events = [ ]

    while (len(Analyzer.issue_oracle(model)) < failures):
        kind = FailureKind.ALL[int(random.integers(0, len(FailureKind.ALL)))]
        targets = model.get_eligible_targets(kind)
        if (len(targets) > 0): events += model.inject_failure(kind, targets[int(random.integers(0, len(targets)))], 0.0)
    #

    annotations = Analyzer().analyze(Annotations(1000), events, model)
    return ( model, annotations )
#

def _get_assignment(plan):
    return [ ( rule_match.issue.id, rule_match.template.id ) for rule_match in plan ]
#

@pytest.mark.parametrize("seed", range(100))
def test_udriven_plan_is_optimal(seed):
    model, annotations = _create_failures(seed, 1 + seed % 5)

    udriven_plan = UdrivenPlanner().plan(annotations, model)

    oracle = OraclePlanner()
    oracle_plan = oracle.plan(annotations, model)

    assert len(udriven_plan) == len(annotations)
    assert oracle.evaluations > 0

    udriven_objective = udriven_plan.get_objective()
    oracle_objective = oracle_plan.get_objective()

    assert udriven_objective[0] == pytest.approx(oracle_objective[0], rel = 1e-9)
    assert udriven_objective[1] == pytest.approx(oracle_objective[1], rel = 1e-9)
#

def test_oracle_interchange_agrees_with_udriven():
    model, annotations = _create_failures(3, 12, 4)

    oracle_plan = OraclePlanner().plan(annotations, model)
    udriven_plan = UdrivenPlanner().plan(annotations, model)

    assert oracle_plan.get_objective()[0] == pytest.approx(udriven_plan.get_objective()[0], rel = 1e-9)
    assert oracle_plan.get_objective()[1] == pytest.approx(udriven_plan.get_objective()[1], rel = 1e-9)
#

def test_udriven_orders_by_ratio():
    model, annotations = _create_failures(11, 8)
    plan = UdrivenPlanner().plan(annotations, model)

    ratios = [ rule_match.ratio for rule_match in plan ]

    assert ratios == sorted(ratios, reverse = True)
    for rule_match in plan: assert rule_match.issue.handled_by is rule_match
#

def test_udriven_truncates_to_k():
    model, annotations = _create_failures(7, 6)

    full_plan = UdrivenPlanner().plan(annotations, model)
    plan = UdrivenPlanner().plan(annotations, model, 2)

    assert len(plan) == 2
    assert _get_assignment(plan) == _get_assignment(full_plan)[:2]
#

def test_static_planner_uses_fixed_rules_and_order(model):
    shop = model.shops[0]
    events = model.inject_failure(FailureKind.CF4, shop.connectors[0], 0.0)
    events += model.inject_failure(FailureKind.CF2, shop.components[3], 0.0)
    events += model.inject_failure(FailureKind.CF1, shop.components[4], 0.0)
    events += model.inject_failure(FailureKind.CF3, shop.components[5], 0.0)

    annotations = Analyzer().analyze(Annotations(10), events, model)
    plan = StaticPlanner(model = model).plan(annotations, model)

    assert [ rule_match.issue.kind for rule_match in plan ] == [ FailureKind.CF3, FailureKind.CF1, FailureKind.CF2, FailureKind.CF4 ]
    assert plan.get_template_ids() == [ "HW_REDEPLOY", "LW_REDEPLOY", "RESTART", "RECREATE_CONNECTOR" ]

    estimates = StaticPlanner.get_design_estimates(model)
    assert [ rule_match.utility_increase for rule_match in plan ] == [ estimates[rule_match.issue.kind] for rule_match in plan ]

    plan = StaticPlanner(model = model).plan(annotations, model, 2)
    assert plan.get_template_ids() == [ "HW_REDEPLOY", "LW_REDEPLOY" ]
#

def test_static_rules_are_configurable(model):
    component = model.shops[0].components[4]
    events = model.inject_failure(FailureKind.CF1, component, 0.0)
    annotations = Analyzer().analyze(Annotations(10), events, model)

    plan = StaticPlanner(rules = { FailureKind.CF1: "RESTART" }).plan(annotations, model)
    assert plan.get_template_ids() == [ "RESTART" ]
#

def test_oracle_rejects_too_many_issues():
    model, annotations = _create_failures(1, 4)

    with pytest.raises(OracleTooLargeException): OraclePlanner(exhaustive_limit = 3).plan(annotations, model)
#

def test_calibrated_oracle_equals_udriven():
    model, annotations = _create_failures(5, 40, 6)

    oracle_plan = OraclePlanner(exhaustive_limit = 3, calibrated = True).plan(annotations, model)
    udriven_plan = UdrivenPlanner().plan(annotations, model)

    assert _get_assignment(oracle_plan) == _get_assignment(udriven_plan)
#

def test_plan_evaluation():
    model, annotations = _create_failures(2, 3)
    plan = UdrivenPlanner().plan(annotations, model)

    completion = 0.0
    weighted_completion = 0.0

    for rule_match in plan:
        completion += rule_match.cost
        weighted_completion += rule_match.utility_increase * completion
    #

    gain, evaluated_completion = plan.get_objective()

    assert gain == pytest.approx(sum(rule_match.utility_increase for rule_match in plan))
    assert evaluated_completion == pytest.approx(weighted_completion)
    assert Plan([ ], "none").get_objective() == ( 0.0, 0.0 )
#

def test_planners_factory():
    assert [ Planners.create(planner_id).id for planner_id in Planners.IDS ] == [ "static", "u-driven", "oracle" ]
    with pytest.raises(ValueException): Planners.create("random")
#

def test_derive_k_uses_most_expensive_rule():
    assert RuleTemplates.derive_k(60.0) == 6
    assert RuleTemplates.derive_k(10.0) == 1
    assert RuleTemplates.derive_k(0.5) == 1
    assert RuleTemplates.derive_k(60.0, RuleTemplates.get_default({ "REPLACE": 20.0 })) == 3
    with pytest.raises(ValueException): RuleTemplates.derive_k(0)
#

def test_rule_costs_are_configurable():
    templates = RuleTemplates.get_default({ "RESTART": 3.0 })

    assert RuleTemplates.get(templates, "RESTART").cost == 3.0
    assert [ template.id for template in templates ] == [ "RESTART", "LW_REDEPLOY", "HW_REDEPLOY", "REPLACE(0)", "REPLACE(1)", "REPLACE(2)", "RECREATE_CONNECTOR" ]
#

def test_calibrated_planning_time_interpolates():
    small = CalibratedPlanningTime.estimate("u-driven", 18, 1)
    large = CalibratedPlanningTime.estimate("u-driven", 18000, 1000)

    assert 0 < small < large
    assert CalibratedPlanningTime.estimate("u-driven", 180, 10) == pytest.approx(CalibratedPlanningTime.TABLE_MS['u-driven'][1][1] / 1000.0)
#

@pytest.mark.parametrize("seed", range(20))
def test_udriven_selects_best_rule_per_issue(seed):
    model, annotations = _create_failures(seed, 2 + seed % 6, 3)

    planner = UdrivenPlanner()
    plan = planner.plan(annotations, model)

    assert planner.rule_instantiations == len(annotations)

    for rule_match in plan:
        candidates = [ template.create_rule_match(model, rule_match.issue) for template in RuleTemplates.get_default() ]
        candidates = [ candidate for candidate in candidates if candidate is not None ]

        utility_increase = max(candidate.utility_increase for candidate in candidates)
        cost = min(candidate.cost for candidate in candidates if candidate.utility_increase == utility_increase)

        assert rule_match.utility_increase == pytest.approx(utility_increase, rel = 1e-12)
        assert rule_match.cost == cost
    #
#

def test_udriven_checks_each_issue_once(monkeypatch):
    model, annotations = _create_failures(4, 10, 3)
    checked_issue_ids = [ ]

    check = Issue.check

    def _counting_check(issue, model = None):
        checked_issue_ids.append(issue.id)
        return check(issue, model)
    #

    monkeypatch.setattr(Issue, "check", _counting_check)
    UdrivenPlanner().plan(annotations, model)

    assert sorted(checked_issue_ids) == sorted(issue.id for issue in annotations.get_issues())
#

def test_udriven_rejects_stale_issue(model):
    component = model.shops[0].components[2]
    annotations = Analyzer().analyze(Annotations(10), model.inject_failure(FailureKind.CF1, component, 0.0), model)

    model.restart_component(component, 1.0)

    with pytest.raises(InvalidRuleMatchException): UdrivenPlanner().plan(annotations, model)
#

def test_swapping_adjacent_rules_lowers_reward():
    model, annotations = _create_failures(8, 10, 3)
    plan = UdrivenPlanner().plan(annotations, model)

    horizon = 10 * sum(rule_match.cost for rule_match in plan)
    reward = plan.get_reward_gain(horizon)
    swaps = 0

    for position in range(len(plan) - 1):
        rule_matches = list(plan)
        if (rule_matches[position].ratio == rule_matches[position + 1].ratio): continue

        rule_matches[position], rule_matches[position + 1] = rule_matches[position + 1], rule_matches[position]

        assert Plan(rule_matches, "swapped").get_reward_gain(horizon) < reward
        swaps += 1
    #

    assert swaps > 0
#

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

from dNG.runtime.io_exception import IOException
from dNG.runtime.value_exception import ValueException

from healsim.data.architecture.architecture_model import ArchitectureModel
from healsim.data.architecture.change_event import ChangeEvent
from healsim.data.architecture.component import Component
from healsim.data.architecture.connector import Connector
from healsim.data.architecture.failure_kind import FailureKind
from healsim.data.architecture.snapshot import Snapshot
from healsim.data.architecture.topology import Topology
from healsim.runtime.target_not_eligible_exception import TargetNotEligibleException

def test_build_creates_marketplace_shops(model_3_shops):
    assert len(model_3_shops.shops) == 3
    assert len(model_3_shops.get_components()) == 3 * Topology.get_slot_count()
    assert len(model_3_shops.get_connectors()) == 3 * Topology.get_connector_count()
    assert len(model_3_shops.component_types) == Topology.get_slot_count() * Topology.ALTERNATIVES_PER_SLOT

    for component in model_3_shops.get_components():
        assert component.state == Component.STATE_STARTED
        assert 1 <= component.criticality <= 10
        assert 0.5 <= component.get_reliability() <= 1.0
        assert component.component_type in model_3_shops.get_alternative_types(component.slot)
    #
#

def test_build_is_deterministic():
    assert Snapshot.export(ArchitectureModel.build(2, 5)) == Snapshot.export(ArchitectureModel.build(2, 5))
    assert Snapshot.export(ArchitectureModel.build(2, 5)) != Snapshot.export(ArchitectureModel.build(2, 6))
#

def test_build_rejects_empty_marketplace():
    with pytest.raises(ValueException): ArchitectureModel.build(0)
#

def test_connectivity_follows_topology(model):
    shop = model.shops[0]

    assert shop.components[14].get_connectivity() == 5
    assert shop.components[1].get_connectivity() == 4
    assert shop.components[0].get_connectivity() == 3

    for connector in shop.connectors:
        assert connector in connector.source.connectors
        assert connector in connector.target.connectors
    #
#

def test_cf1_crashes_component(model):
    component = model.shops[0].components[3]
    events = model.inject_failure(FailureKind.CF1, component, 1.5)

    assert component.state == Component.STATE_CRASHED
    assert [ event.kind for event in events ] == [ ChangeEvent.COMPONENT_CRASHED ]
    assert events[0].time == 1.5
    assert not model.is_eligible(FailureKind.CF1, component)
#

def test_cf2_adds_five_exceptions(model):
    component = model.shops[0].components[3]
    events = model.inject_failure(FailureKind.CF2, component, 2.0)

    assert component.state == Component.STATE_STARTED
    assert len(component.failures) == ArchitectureModel.CF2_EXCEPTION_COUNT
    assert [ event.kind for event in events ] == [ ChangeEvent.EXCEPTION_OCCURRED ] * 5
    assert len(set(event.attributes['failure_id'] for event in events)) == 5
#

def test_cf4_blocks_source_component(model):
    connector = model.shops[0].connectors[0]
    model.inject_failure(FailureKind.CF4, connector, 0.0)

    assert connector.state == Connector.STATE_CRASHED
    assert connector.source.has_crashed_outgoing_connector()
    assert not model.is_eligible(FailureKind.CF1, connector.source)
    assert model.is_eligible(FailureKind.CF1, connector.target)

    with pytest.raises(TargetNotEligibleException): model.inject_failure(FailureKind.CF4, connector, 1.0)
#

def test_ineligible_targets_are_rejected(model):
    component = model.shops[0].components[5]
    model.inject_failure(FailureKind.CF3, component, 0.0)

    with pytest.raises(TargetNotEligibleException): model.inject_failure(FailureKind.CF2, component, 1.0)
    with pytest.raises(TargetNotEligibleException): model.inject_failure(FailureKind.CF4, component, 1.0)

    assert component not in model.get_eligible_targets(FailureKind.CF1)
#

def test_restart_and_redeploy_recover_component(model):
    component = model.shops[0].components[2]

    model.inject_failure(FailureKind.CF2, component, 0.0)
    events = model.restart_component(component, 1.0)

    assert component.failures == [ ]
    assert component.state == Component.STATE_STARTED
    assert events[0].kind == ChangeEvent.COMPONENT_RESTARTED

    model.inject_failure(FailureKind.CF3, component, 2.0)
    events = model.redeploy_component(component, 3.0, True)

    assert component.state == Component.STATE_STARTED
    assert events[0].attributes['heavy'] is True
#

def test_replace_rewires_connectors(model):
    component = model.shops[0].components[14]
    connectors = list(component.connectors)
    component_type = [ alternative for alternative in model.get_alternative_types(14) if alternative is not component.component_type ][0]

    model.inject_failure(FailureKind.CF1, component, 0.0)
    events = model.replace_component(component, component_type, 5.0)

    new_component = events[0].subject

    assert events[0].kind == ChangeEvent.COMPONENT_REPLACED
    assert events[0].previous is component
    assert not model.contains(component)
    assert model.contains(new_component)
    assert new_component.id.startswith("{0}-".format(component.id))
    assert new_component.component_type is component_type
    assert new_component.criticality == component.criticality
    assert new_component.state == Component.STATE_STARTED
    assert new_component.connectors == connectors
    assert model.shops[0].components[14] is new_component

    for connector in connectors: assert new_component in ( connector.source, connector.target )
#

def test_replace_rejects_foreign_slot_type(model):
    component = model.shops[0].components[14]

    with pytest.raises(ValueException): model.replace_component(component, model.get_alternative_types(13)[0], 0.0)
#

def test_recreate_connector_keeps_position(model):
    connector = model.shops[0].connectors[7]
    model.inject_failure(FailureKind.CF4, connector, 0.0)

    events = model.recreate_connector(connector, 1.0)
    new_connector = events[0].subject

    assert new_connector.state == Connector.STATE_OK
    assert new_connector.position == 7
    assert model.shops[0].connectors[7] is new_connector
    assert model.get_target_at(FailureKind.CF4, 7) is new_connector
    assert not model.contains(connector)
    assert new_connector in new_connector.source.connectors
    assert not new_connector.source.has_crashed_outgoing_connector()
#

def test_target_positions_are_stable(model_3_shops):
    count = model_3_shops.get_target_count(FailureKind.CF1)

    assert count == 3 * Topology.get_slot_count()
    assert model_3_shops.get_target_at(FailureKind.CF1, Topology.get_slot_count() + 2) is model_3_shops.shops[1].components[2]
    assert model_3_shops.get_target_count(FailureKind.CF4) == 3 * Topology.get_connector_count()
#

def test_replay_reconstructs_model(model_3_shops, random_schedule):
    initial = model_3_shops.clone()
    schedule = random_schedule(model_3_shops, 11)

    events = [ ]
    for _ in range(60): events += schedule.step()

    initial.replay(events)

    assert Snapshot.export(initial) == Snapshot.export(model_3_shops)
#

def test_snapshot_import_restores_model(model_3_shops, random_schedule):
    schedule = random_schedule(model_3_shops, 3)
    for _ in range(40): schedule.step()

    data = Snapshot.export(model_3_shops)
    imported = Snapshot.import_snapshot(data)

    assert Snapshot.export(imported) == data
    assert imported.next_number == model_3_shops.next_number
#

def test_snapshot_import_rejects_unknown_lines():
    with pytest.raises(IOException): Snapshot.import_snapshot("widget W1 size=3\n")
#

def test_clone_is_independent(model):
    copy = model.clone()
    copy.inject_failure(FailureKind.CF1, copy.shops[0].components[0], 0.0)

    assert model.shops[0].components[0].state == Component.STATE_STARTED
    assert copy.log_handler is model.log_handler
#

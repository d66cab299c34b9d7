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

from copy import deepcopy

from numpy.random import default_rng

from dNG.module.named_loader import NamedLoader
from dNG.runtime.value_exception import ValueException

from healsim.runtime.stale_match_exception import StaleMatchException
from healsim.runtime.target_not_eligible_exception import TargetNotEligibleException

from .change_event import ChangeEvent
from .component import Component
from .component_type import ComponentType
from .connector import Connector
from .failure import Failure
from .failure_kind import FailureKind
from .shop import Shop
from .topology import Topology

class ArchitectureModel(object):
    """
The runtime architecture model of the marketplace: component types, shops,
components and connectors. All mutations return the change events they
caused.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: architecture
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    CF2_EXCEPTION_COUNT = 5
    """
Exceptions thrown by a component affected by CF2
    """

    def __init__(self):
        """
Constructor __init__(ArchitectureModel)

:since: v0.1.00
        """

        self.component_types = { }
        """
Component types by ID
        """
        self.components = { }
        """
Components by ID
        """
        self.connectors = { }
        """
Connectors by ID
        """
        self.log_handler = NamedLoader.get_singleton("dNG.data.logging.LogHandler", False)
        """
The LogHandler is called whenever debug messages should be logged or errors
happened.
        """
        self.next_number = 1
        """
Sequence number used for IDs of failures and replacement elements
        """
        self.shops = [ ]
        """
Shops in creation order
        """
        self._shops_by_id = { }
        """
Shops by ID
        """
        self._types_by_slot = { }
        """
Component type alternatives per slot
        """
    #

    def __repr__(self):
        """
python.org: Called by the repr() built-in function to compute the
"official" string representation of an object.

:return: (str) String representation
:since:  v0.1.00
        """

        return "<ArchitectureModel shops={0:d} components={1:d}>".format(len(self.shops), len(self.components))
    #

    def _get_next_number(self):
        """
Returns the next element sequence number.

:return: (int) Sequence number
:since:  v0.1.00
        """

        _return = self.next_number
        self.next_number += 1

        return _return
    #

    def _update_next_number(self, attributes):
        """
Advances the sequence number past the one used by a replayed event.

:param attributes: Event attributes

:since: v0.1.00
        """

        if ("number" in attributes): self.next_number = max(self.next_number, attributes['number'] + 1)
    #

    def add_component(self, shop, slot, component_type, criticality, _id = None, state = Component.STATE_STARTED):
        """
Adds a component to the given shop slot.

:param shop: Shop instance
:param slot: Slot index
:param component_type: Component type instance
:param criticality: Criticality in [1, 10]
:param _id: Component ID
:param state: Initial lifecycle state

:return: (object) Component instance
:since:  v0.1.00
        """

        criticality_min, criticality_max = Topology.CRITICALITY_RANGE

        if (shop.components[slot] is not None): raise ValueException("Slot {0:d} of shop {1} is occupied".format(slot, shop.id))
        if (criticality < criticality_min or criticality > criticality_max): raise ValueException("Criticality {0!r} is out of range".format(criticality))
        if (component_type.slot != slot): raise ValueException("Component type {0} does not implement slot {1:d}".format(component_type.id, slot))

        if (_id is None): _id = "C{0:04d}.{1:02d}".format(shop.index, slot)
        if (_id in self.components): raise ValueException("Component ID {0} is already in use".format(_id))

        _return = Component(_id, component_type, shop.id, slot, criticality, state)

        shop.components[slot] = _return
        self.components[_id] = _return

        return _return
    #

    def add_component_type(self, slot, reliability, name = None, _id = None):
        """
Adds a component type alternative for the given slot.

:param slot: Slot index
:param reliability: Reliability in (0, 1]
:param name: Human readable name
:param _id: Component type ID

:return: (object) ComponentType instance
:since:  v0.1.00
        """

        alternatives = self._types_by_slot.setdefault(slot, [ ])

        if (_id is None): _id = "T{0:02d}.{1:d}".format(slot, len(alternatives))
        if (name is None): name = "{0} #{1:d}".format(Topology.SLOTS[slot], len(alternatives))
        if (_id in self.component_types): raise ValueException("Component type ID {0} is already in use".format(_id))

        _return = ComponentType(_id, name, slot, reliability)

        alternatives.append(_return)
        self.component_types[_id] = _return

        return _return
    #

    def add_connector(self, shop, position, _id = None, state = Connector.STATE_OK):
        """
Adds the connector at the given topology position of the shop.

:param shop: Shop instance
:param position: Topology position
:param _id: Connector ID
:param state: Initial connector state

:return: (object) Connector instance
:since:  v0.1.00
        """

        source_slot, target_slot = Topology.CONNECTIONS[position]
        source = shop.components[source_slot]
        target = shop.components[target_slot]

        if (source is None or target is None): raise ValueException("Connector position {0:d} of shop {1} lacks a component".format(position, shop.id))
        if (shop.connectors[position] is not None): raise ValueException("Connector position {0:d} of shop {1} is occupied".format(position, shop.id))

        if (_id is None): _id = "K{0:04d}.{1:02d}".format(shop.index, position)
        if (_id in self.connectors): raise ValueException("Connector ID {0} is already in use".format(_id))

        _return = Connector(_id, source, target, Topology.get_interface_name(target_slot), position, state)

        source.connectors.append(_return)
        target.connectors.append(_return)
        shop.connectors[position] = _return
        self.connectors[_id] = _return

        return _return
    #

    def add_shop(self, _id = None):
        """
Adds an empty shop.

:param _id: Shop ID

:return: (object) Shop instance
:since:  v0.1.00
        """

        index = len(self.shops)
        if (_id is None): _id = "S{0:04d}".format(index)
        if (_id in self._shops_by_id): raise ValueException("Shop ID {0} is already in use".format(_id))

        _return = Shop(_id, index, Topology.get_slot_count(), Topology.get_connector_count())

        self.shops.append(_return)
        self._shops_by_id[_id] = _return

        return _return
    #

    def apply_repair(self, rule_match, time, annotations = None):
        """
Executes the repair rule of the given rule match. The handled issue is
deleted from the annotations if given.

:param rule_match: Rule match to execute
:param time: Virtual time of the repair
:param annotations: Annotations holding the handled issue

:return: (list) Change events caused
:since:  v0.1.00
        """

        issue = rule_match.issue
        if (not issue.check(self)): raise StaleMatchException("Issue {0} does not exist anymore".format(issue.id))

        _return = rule_match.template.execute(self, rule_match, time)
        if (annotations is not None): annotations.delete_issue(issue)

        if (self.log_handler is not None): self.log_handler.debug("{0!r} applied {1} for {2} at {3!r}", self, rule_match.template.id, issue.id, time, context = "architecture")

        return _return
    #

    def clone(self):
        """
Returns a deep copy of this model.

:return: (object) ArchitectureModel instance
:since:  v0.1.00
        """

        return deepcopy(self, { id(self.log_handler): self.log_handler })
    #

    def contains(self, element):
        """
Returns true if the given component or connector is part of this model.

:param element: Component or connector

:return: (bool) True if contained
:since:  v0.1.00
        """

        if (isinstance(element, Component)): _return = (self.components.get(element.id) is element)
        elif (isinstance(element, Connector)): _return = (self.connectors.get(element.id) is element)
        else: _return = False

        return _return
    #

    def get_alternative_type(self, slot, index):
        """
Returns the component type alternative with the given index of the slot.

:param slot: Slot index
:param index: Alternative index

:return: (object) ComponentType; None if not defined
:since:  v0.1.00
        """

        alternatives = self._types_by_slot.get(slot)
        return (alternatives[index] if (alternatives is not None and index < len(alternatives)) else None)
    #

    def get_alternative_types(self, slot):
        """
Returns the component type alternatives of the given slot.

:param slot: Slot index

:return: (list) ComponentType instances
:since:  v0.1.00
        """

        return list(self._types_by_slot.get(slot, [ ]))
    #

    def get_component(self, _id):
        """
Returns the component with the given ID.

:param _id: Component ID

:return: (object) Component instance
:since:  v0.1.00
        """

        if (_id not in self.components): raise ValueException("Component {0} is not part of the model".format(_id))
        return self.components[_id]
    #

    def get_components(self):
        """
Returns all components.

:return: (list) Component instances
:since:  v0.1.00
        """

        return list(self.components.values())
    #

    def get_connector(self, _id):
        """
Returns the connector with the given ID.

:param _id: Connector ID

:return: (object) Connector instance
:since:  v0.1.00
        """

        if (_id not in self.connectors): raise ValueException("Connector {0} is not part of the model".format(_id))
        return self.connectors[_id]
    #

    def get_connectors(self):
        """
Returns all connectors.

:return: (list) Connector instances
:since:  v0.1.00
        """

        return list(self.connectors.values())
    #

    def get_element(self, _id):
        """
Returns the component or connector with the given ID.

:param _id: Element ID

:return: (object) Component or connector instance
:since:  v0.1.00
        """

        _return = self.components.get(_id)
        if (_return is None): _return = self.connectors.get(_id)
        if (_return is None): raise ValueException("Element {0} is not part of the model".format(_id))

        return _return
    #

    def get_eligible_targets(self, kind):
        """
Returns all elements eligible for the given failure kind.

:param kind: Failure kind

:return: (list) Components or connectors
:since:  v0.1.00
        """

        elements = (self.connectors.values() if (kind == FailureKind.CF4) else self.components.values())
        return [ element for element in elements if self.is_eligible(kind, element) ]
    #

    def get_shop(self, _id):
        """
Returns the shop with the given ID.

:param _id: Shop ID

:return: (object) Shop instance
:since:  v0.1.00
        """

        if (_id not in self._shops_by_id): raise ValueException("Shop {0} is not part of the model".format(_id))
        return self._shops_by_id[_id]
    #

    def get_target_at(self, kind, position):
        """
Returns the element at the given stable target position. Positions are
enumerated shop by shop, then slot by slot (or connector by connector for
CF4), and keep their meaning when elements are replaced.

:param kind: Failure kind
:param position: Target position

:return: (object) Component or connector; None if the position is empty
:since:  v0.1.00
        """

        is_connector = (kind == FailureKind.CF4)
        per_shop = (Topology.get_connector_count() if (is_connector) else Topology.get_slot_count())

        shop = self.shops[position // per_shop]
        elements = (shop.connectors if (is_connector) else shop.components)

        return elements[position % per_shop]
    #

    def get_target_count(self, kind):
        """
Returns the number of target positions for the given failure kind.

:param kind: Failure kind

:return: (int) Target positions
:since:  v0.1.00
        """

        return len(self.shops) * (Topology.get_connector_count() if (kind == FailureKind.CF4) else Topology.get_slot_count())
    #

    def inject_failure(self, kind, target, time):
        """
Injects a critical failure into the given target.

:param kind: Failure kind
:param target: Component (CF1 - CF3) or connector (CF4)
:param time: Virtual time of the failure

:return: (list) Change events caused
:since:  v0.1.00
        """

        FailureKind.validate(kind)

        if (not self.is_eligible(kind, target)):
            raise TargetNotEligibleException("{0!r} is not eligible for {1}".format(target, kind))
        #

        _return = [ ]

        if (kind == FailureKind.CF1):
            target.state = Component.STATE_CRASHED
            _return.append(ChangeEvent(ChangeEvent.COMPONENT_CRASHED, target, time))
        elif (kind == FailureKind.CF2):
            for _ in range(ArchitectureModel.CF2_EXCEPTION_COUNT):
                number = self._get_next_number()
                failure = Failure("F{0:d}".format(number), target.id, time)

                target.failures.append(failure)
                _return.append(ChangeEvent(ChangeEvent.EXCEPTION_OCCURRED, target, time, attributes = { "failure_id": failure.id, "number": number }))
            #
        elif (kind == FailureKind.CF3):
            target.state = Component.STATE_REMOVED
            _return.append(ChangeEvent(ChangeEvent.COMPONENT_REMOVED, target, time))
        else:
            target.state = Connector.STATE_CRASHED
            _return.append(ChangeEvent(ChangeEvent.CONNECTOR_CRASHED, target, time))
        #

        if (self.log_handler is not None): self.log_handler.debug("{0!r} injected {1} into {2} at {3!r}", self, kind, target.id, time, context = "architecture")

        return _return
    #

    def is_eligible(self, kind, element):
        """
Returns true if the element may be affected by the given failure kind.
Components must be started, free of failures and must not require an
interface through a crashed connector. Connectors must be working and
their source component must be eligible.

:param kind: Failure kind
:param element: Component or connector

:return: (bool) True if eligible
:since:  v0.1.00
        """

        if (kind == FailureKind.CF4):
            _return = (isinstance(element, Connector)
                       and self.contains(element)
                       and element.state == Connector.STATE_OK
                       and self._is_component_eligible(element.source)
                      )
        else: _return = (isinstance(element, Component) and self._is_component_eligible(element))

        return _return
    #

    def _is_component_eligible(self, component):
        """
Returns true if the component may be affected by a new failure.

:param component: Component

:return: (bool) True if eligible
:since:  v0.1.00
        """

        return (self.contains(component)
                and component.state == Component.STATE_STARTED
                and len(component.failures) < 1
                and (not component.has_crashed_outgoing_connector())
               )
    #

    def recreate_connector(self, connector, time):
        """
Replaces the given connector by a new one with the same endpoints.

:param connector: Connector to recreate
:param time: Virtual time of the repair

:return: (list) Change events caused
:since:  v0.1.00
        """

        number = self._get_next_number()
        _id = "{0}-{1:d}".format(connector.id.split("-", 1)[0], number)

        new_connector = self._recreate_connector(connector, _id)
        return [ ChangeEvent(ChangeEvent.CONNECTOR_RECREATED, new_connector, time, connector, { "number": number }) ]
    #

    def _recreate_connector(self, connector, _id):
        """
Replaces the given connector by a new one with the given ID.

:param connector: Connector to recreate
:param _id: ID of the new connector

:return: (object) New connector
:since:  v0.1.00
        """

        if (not self.contains(connector)): raise ValueException("{0!r} is not part of the model".format(connector))

        _return = Connector(_id, connector.source, connector.target, connector.interface, connector.position)

        for component in ( connector.source, connector.target ):
            component.connectors[component.connectors.index(connector)] = _return
        #

        shop = self.get_shop(connector.get_shop_id())
        shop.connectors[connector.position] = _return

        del(self.connectors[connector.id])
        self.connectors[_id] = _return

        return _return
    #

    def redeploy_component(self, component, time, heavy = False):
        """
Redeploys and starts the given component.

:param component: Component to redeploy
:param time: Virtual time of the repair
:param heavy: True for a heavy-weight redeployment

:return: (list) Change events caused
:since:  v0.1.00
        """

        if (not self.contains(component)): raise ValueException("{0!r} is not part of the model".format(component))

        component.state = Component.STATE_DEPLOYED
        component.failures = [ ]
        component.state = Component.STATE_STARTED

        return [ ChangeEvent(ChangeEvent.COMPONENT_REDEPLOYED, component, time, attributes = { "heavy": heavy }) ]
    #

    def replace_component(self, component, component_type, time):
        """
Replaces the given component by a new started instance of the given
component type. Connectors are rewired to the new instance.

:param component: Component to replace
:param component_type: Component type of the new instance
:param time: Virtual time of the repair

:return: (list) Change events caused
:since:  v0.1.00
        """

        number = self._get_next_number()
        _id = "{0}-{1:d}".format(component.id.split("-", 1)[0], number)

        new_component = self._replace_component(component, component_type, _id)
        return [ ChangeEvent(ChangeEvent.COMPONENT_REPLACED, new_component, time, component, { "number": number, "type_id": component_type.id }) ]
    #

    def _replace_component(self, component, component_type, _id):
        """
Replaces the given component by a new one with the given ID.

:param component: Component to replace
:param component_type: Component type of the new instance
:param _id: ID of the new component

:return: (object) New component
:since:  v0.1.00
        """

        if (not self.contains(component)): raise ValueException("{0!r} is not part of the model".format(component))
        if (component_type.slot != component.slot): raise ValueException("Component type {0} does not implement slot {1:d}".format(component_type.id, component.slot))

        _return = Component(_id, component_type, component.shop_id, component.slot, component.criticality)

        for connector in component.connectors:
            if (connector.source is component): connector.source = _return
            if (connector.target is component): connector.target = _return
        #

        _return.connectors = component.connectors
        component.connectors = [ ]

        shop = self.get_shop(component.shop_id)
        shop.components[component.slot] = _return

        del(self.components[component.id])
        self.components[_id] = _return

        return _return
    #

    def replay(self, events):
        """
Applies the given change events to this model by element IDs. Replaying
the events of another model on a copy taken before they occurred yields
an identical model.

:param events: Change events

:since: v0.1.00
        """

        for event in events:
            self._update_next_number(event.attributes)

            if (event.kind == ChangeEvent.COMPONENT_CRASHED): self.get_component(event.subject.id).state = Component.STATE_CRASHED
            elif (event.kind == ChangeEvent.COMPONENT_REMOVED): self.get_component(event.subject.id).state = Component.STATE_REMOVED
            elif (event.kind == ChangeEvent.EXCEPTION_OCCURRED):
                component = self.get_component(event.subject.id)
                component.failures.append(Failure(event.attributes['failure_id'], component.id, event.time))
            elif (event.kind == ChangeEvent.CONNECTOR_CRASHED): self.get_connector(event.subject.id).state = Connector.STATE_CRASHED
            elif (event.kind in ( ChangeEvent.COMPONENT_RESTARTED, ChangeEvent.COMPONENT_REDEPLOYED )):
                component = self.get_component(event.subject.id)
                component.failures = [ ]
                component.state = Component.STATE_STARTED
            elif (event.kind == ChangeEvent.COMPONENT_REPLACED):
                self._replace_component(self.get_component(event.previous.id),
                                        self.component_types[event.attributes['type_id']],
                                        event.subject.id
                                       )
            elif (event.kind == ChangeEvent.CONNECTOR_RECREATED):
                self._recreate_connector(self.get_connector(event.previous.id), event.subject.id)
            else: raise ValueException("Change event kind '{0}' is not supported".format(event.kind))
        #
    #

    def restart_component(self, component, time):
        """
Restarts the given component.

:param component: Component to restart
:param time: Virtual time of the repair

:return: (list) Change events caused
:since:  v0.1.00
        """

        if (not self.contains(component)): raise ValueException("{0!r} is not part of the model".format(component))

        component.state = Component.STATE_DEPLOYED
        component.failures = [ ]
        component.state = Component.STATE_STARTED

        return [ ChangeEvent(ChangeEvent.COMPONENT_RESTARTED, component, time) ]
    #

    @staticmethod
    def build(shops, seed = 0):
        """
Builds a marketplace with the given number of shops. Component type
reliabilities, the initial component types and criticalities are drawn
from a generator seeded with the given seed.

:param shops: Number of shops
:param seed: Random seed

:return: (object) ArchitectureModel instance
:since:  v0.1.00
        """

        if (shops < 1): raise ValueException("At least one shop is required")

        random = default_rng(seed)
        _return = ArchitectureModel()

        reliability_min, reliability_max = Topology.RELIABILITY_RANGE
        criticality_min, criticality_max = Topology.CRITICALITY_RANGE

        for slot in range(Topology.get_slot_count()):
            for _ in range(Topology.ALTERNATIVES_PER_SLOT):
                _return.add_component_type(slot, float(random.uniform(reliability_min, reliability_max)))
            #
        #

        for _ in range(shops):
            shop = _return.add_shop()

            for slot in range(Topology.get_slot_count()):
                alternatives = _return._types_by_slot[slot]

                _return.add_component(shop,
                                      slot,
                                      alternatives[int(random.integers(0, len(alternatives)))],
                                      int(random.integers(criticality_min, criticality_max + 1))
                                     )
            #

            for position in range(Topology.get_connector_count()): _return.add_connector(shop, position)
        #

        if (_return.log_handler is not None): _return.log_handler.debug("{0!r} built with seed {1!r}", _return, seed, context = "architecture")

        return _return
    #
#

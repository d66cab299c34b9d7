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

from urllib.parse import quote, unquote

from dNG.runtime.io_exception import IOException
from dNG.runtime.type_exception import TypeException

from .architecture_model import ArchitectureModel
from .failure import Failure

class Snapshot(object):
    """
Line based text encoding of an architecture model. Each line holds the
element kind, its ID and "key=value" attributes. Floats are written with
"repr()" and survive a round trip unchanged.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: architecture
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    KIND_COMPONENT = "component"
    """
Component line
    """
    KIND_CONNECTOR = "connector"
    """
Connector line
    """
    KIND_FAILURE = "failure"
    """
Failure line
    """
    KIND_MODEL = "model"
    """
Model header line
    """
    KIND_SHOP = "shop"
    """
Shop line
    """
    KIND_TYPE = "type"
    """
Component type line
    """
    FLOAT_ATTRIBUTES = ( "reliability", "time" )
    """
Attributes decoded as float
    """
    INT_ATTRIBUTES = ( "criticality", "index", "next_number", "position", "slot" )
    """
Attributes decoded as int
    """

    @staticmethod
    def _decode_line(line):
        """
Decodes a snapshot line.

:param line: Snapshot line

:return: (tuple) Kind, ID and attributes dict
:since:  v0.1.00
        """

        fields = line.split(" ")
        if (len(fields) < 2): raise IOException("Malformed snapshot line '{0}'".format(line))

        attributes = { }

        for field in fields[2:]:
            if ("=" not in field): raise IOException("Malformed snapshot attribute '{0}'".format(field))
            key, value = field.split("=", 1)

            if (key in Snapshot.FLOAT_ATTRIBUTES): attributes[key] = float(value)
            elif (key in Snapshot.INT_ATTRIBUTES): attributes[key] = int(value)
            else: attributes[key] = unquote(value)
        #

        return ( fields[0], unquote(fields[1]), attributes )
    #

    @staticmethod
    def _encode_line(kind, _id, attributes):
        """
Encodes a snapshot line.

:param kind: Element kind
:param _id: Element ID
:param attributes: List of ( key, value ) tuples

:return: (str) Snapshot line
:since:  v0.1.00
        """

        fields = [ kind, quote(_id, safe = "") ]

        for key, value in attributes:
            if (isinstance(value, bool)): raise TypeException("Boolean values are not supported in snapshots")
            elif (isinstance(value, float)): value = repr(value)
            elif (isinstance(value, int)): value = str(value)
            elif (isinstance(value, str)): value = quote(value, safe = "")
            else: raise TypeException("Object type is not supported in snapshots")

            fields.append("{0}={1}".format(key, value))
        #

        return " ".join(fields)
    #

    @staticmethod
    def export(model):
        """
Exports the given architecture model.

:param model: Architecture model

:return: (str) Snapshot text
:since:  v0.1.00
        """

        lines = [ Snapshot._encode_line(Snapshot.KIND_MODEL, "healsim", [ ( "next_number", model.next_number ) ]) ]

        for component_type in model.component_types.values():
            lines.append(Snapshot._encode_line(Snapshot.KIND_TYPE,
                                               component_type.id,
                                               [ ( "slot", component_type.slot ),
                                                 ( "reliability", component_type.reliability ),
                                                 ( "name", component_type.name )
                                               ]
                                              ))
        #

        failure_lines = [ ]

        for shop in model.shops:
            lines.append(Snapshot._encode_line(Snapshot.KIND_SHOP, shop.id, [ ( "index", shop.index ) ]))

            for component in shop.get_components():
                lines.append(Snapshot._encode_line(Snapshot.KIND_COMPONENT,
                                                   component.id,
                                                   [ ( "shop", shop.id ),
                                                     ( "slot", component.slot ),
                                                     ( "type", component.component_type.id ),
                                                     ( "criticality", component.criticality ),
                                                     ( "state", component.state )
                                                   ]
                                                  ))

                for failure in component.failures:
                    failure_lines.append(Snapshot._encode_line(Snapshot.KIND_FAILURE,
                                                               failure.id,
                                                               [ ( "component", component.id ), ( "time", float(failure.time) ) ]
                                                              ))
                #
            #

            for connector in shop.get_connectors():
                lines.append(Snapshot._encode_line(Snapshot.KIND_CONNECTOR,
                                                   connector.id,
                                                   [ ( "shop", shop.id ),
                                                     ( "position", connector.position ),
                                                     ( "source", connector.source.id ),
                                                     ( "target", connector.target.id ),
                                                     ( "state", connector.state )
                                                   ]
                                                  ))
            #
        #

        lines += failure_lines
        return "\n".join(lines) + "\n"
    #

    @staticmethod
    def import_snapshot(data):
        """
Imports an architecture model from the given snapshot text.

:param data: Snapshot text

:return: (object) ArchitectureModel instance
:since:  v0.1.00
        """

        _return = ArchitectureModel()

        for line in data.splitlines():
            line = line.strip()
            if (line == ""): continue

            kind, _id, attributes = Snapshot._decode_line(line)

            try:
                if (kind == Snapshot.KIND_MODEL): _return.next_number = attributes['next_number']
                elif (kind == Snapshot.KIND_TYPE): _return.add_component_type(attributes['slot'], attributes['reliability'], attributes['name'], _id)
                elif (kind == Snapshot.KIND_SHOP):
                    shop = _return.add_shop(_id)
                    if (shop.index != attributes['index']): raise IOException("Shop {0} is out of order".format(_id))
                elif (kind == Snapshot.KIND_COMPONENT):
                    _return.add_component(_return.get_shop(attributes['shop']),
                                          attributes['slot'],
                                          _return.component_types[attributes['type']],
                                          attributes['criticality'],
                                          _id,
                                          attributes['state']
                                         )
                elif (kind == Snapshot.KIND_CONNECTOR):
                    connector = _return.add_connector(_return.get_shop(attributes['shop']), attributes['position'], _id, attributes['state'])

                    if (connector.source.id != attributes['source'] or connector.target.id != attributes['target']):
                        raise IOException("Connector {0} does not match the shop topology".format(_id))
                    #
                elif (kind == Snapshot.KIND_FAILURE):
                    component = _return.get_component(attributes['component'])
                    component.failures.append(Failure(_id, component.id, attributes['time']))
                else: raise IOException("Unknown snapshot element kind '{0}'".format(kind))
            except KeyError as handled_exception: raise IOException("Snapshot line '{0}' lacks an attribute".format(line), _exception = handled_exception)
        #

        return _return
    #
#

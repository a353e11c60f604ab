"""Module docstring mentioning unrelated words like banana and orchestra."""
import os

def address_proxy(server, socket):
    # comment about buffering things and pineapple
    request = response_address(PacketTimeout, 'string connection')
    TimeoutSocket = zeppelinRequest(harborServer, 'string timeout')
    return response_proxy

def gl_socket(timeoutProxy, ProxyClient):
    # comment about addressing things and pineapple
    pebblePacket = cookie_header(ProxySession, 'string address')
    db_timeout = connection_client(server, 'string packet')
    requestPort = sessionBuffer(SessionPacket, 'string packet')
    responseSocket = np_client(PortAddress, 'string header')
    return proxy_buffer

def address(connection, request, socket_port):
    # comment about responseing things and pineapple
    PacketAddress = zeppelinClient(SessionServer, 'string connection')
    serverTimeout = np_header(buffer, 'string socket')
    return timeout_response

def address_buffer(client_buffer, address, TimeoutConnection):
    # comment about headering things and pineapple
    db_header = port_client(server, 'string packet')
    addressSocket = sessionBuffer(proxy, 'string session')
    timeout_response = np_session(session, 'string client')
    response = requestSession(address, 'string client')
    return PacketClient


"""Module docstring mentioning unrelated words like banana and orchestra."""
import os

def np_header(client_packet, thistleSession, AddressSocket):
    # comment about cookieing things and pineapple
    gl_socket = cookie(SocketProxy, 'string port')
    np_timeout = client_request(timeoutHeader, 'string port')
    return js_proxy

def db_address(client, harborPacket):
    # comment about responseing things and pineapple
    SocketTimeout = connection(response, 'string connection')
    lanternSession = request(sessionPacket, 'string session')
    packet = server(io_buffer, 'string request')
    return packetPort

def request_server(np_packet, HeaderConnection, address_address):
    # comment about socketing things and pineapple
    np_socket = ConnectionCookie(packet_request, 'string timeout')
    np_session = header(js_cookie, 'string address')
    packet = connection_buffer(np_packet, 'string socket')
    ServerSocket = request(ResponseConnection, 'string response')
    clientTimeout = io_header(socket, 'string header')
    return gl_buffer

def session(session):
    # comment about packeting things and pineapple
    request = BufferPort(gl_proxy, 'string connection')
    ClientConnection = AddressResponse(timeout_timeout, 'string socket')
    return db_buffer

def response(proxy_header, client_connection):
    # comment about servering things and pineapple
    connectionSocket = request(header_address, 'string header')
    addressClient = gl_connection(addressRequest, 'string address')
    cookie = address_request(connection_session, 'string port')
    socket_timeout = headerSession(cookie, 'string proxy')
    return request


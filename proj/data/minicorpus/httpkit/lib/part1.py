"""Module docstring mentioning unrelated words like banana and orchestra."""
import os

def timeout_connection(session, gl_request, clientConnection):
    # comment about socketing things and pineapple
    CookieAddress = server(np_buffer, 'string cookie')
    timeout = connectionConnection(np_port, 'string connection')
    np_socket = io_server(buffer, 'string session')
    return response_port

def np_request(AddressConnection, np_connection, client):
    # comment about addressing things and pineapple
    cookie_session = address_buffer(connectionRequest, 'string request')
    portRequest = session_address(db_connection, 'string request')
    cookie = sessionConnection(address, 'string server')
    response = address(socketRequest, 'string response')
    port = gl_header(headerClient, 'string cookie')
    return port

def session(header_response):
    # comment about addressing things and pineapple
    timeout = socket(port, 'string response')
    server = AddressHeader(ServerRequest, 'string header')
    return saffronBuffer

def PacketHeader(responseHeader):
    # comment about proxying things and pineapple
    proxy = portConnection(request, 'string socket')
    address = SocketClient(port, 'string address')
    return responseClient


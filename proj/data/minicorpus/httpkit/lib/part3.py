"""Module docstring mentioning unrelated words like banana and orchestra."""
import os

def db_server(serverSocket):
    # comment about headering things and pineapple
    request = js_address(buffer_cookie, 'string port')
    packetSocket = response(headerHeader, 'string buffer')
    session_packet = cobaltProxy(socketPort, 'string response')
    return socketProxy

def socket(HeaderBuffer, sessionServer, ProxyConnection):
    # comment about connectioning things and pineapple
    np_server = db_client(io_server, 'string response')
    connectionSession = response(PacketServer, 'string header')
    return server

def connectionAddress(packetPacket):
    # comment about responseing things and pineapple
    meadowPacket = np_connection(sessionClient, 'string session')
    proxy_buffer = buffer(proxy, 'string response')
    cookie_request = walnutAddress(db_port, 'string packet')
    ProxySession = connection_request(client_response, 'string response')
    return cookie


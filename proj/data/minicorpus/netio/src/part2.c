#include <stdio.h>
/* block comment: marmalade */

static int packet(int js_address, char *port) {
    int gl_timeout = timeout(client_request); // response note
    int sessionCookie = ServerConnection(proxy); // buffer note
    int PacketPacket = js_server(bufferCookie); // timeout note
    int address = bufferSession(buffer_socket); // socket note
    printf("%d walrus\n", headerRequest);
    return connection;
}

static int session(int RequestSession, char *address_address) {
    int session = io_client(socket); // proxy note
    int socketConnection = header(io_response); // session note
    int packet_cookie = serverTimeout(bufferCookie); // cookie note
    printf("%d walrus\n", header);
    return np_request;
}

static int timeout(int ConnectionAddress, char *server) {
    int js_socket = server_port(timeout); // address note
    int ProxyBuffer = header(bufferBuffer); // connection note
    int cookieRequest = glacierSession(server); // proxy note
    printf("%d walrus\n", session_session);
    return session_address;
}

static int header_response(int proxy, char *SessionServer) {
    int js_response = ServerConnection(mosaicTimeout); // buffer note
    int proxy = ResponsePort(response); // session note
    int TimeoutClient = response_header(gl_request); // port note
    printf("%d walrus\n", session);
    return io_header;
}


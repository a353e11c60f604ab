#include <stdio.h>
/* block comment: marmalade */

static int proxy_port(int HeaderConnection, char *proxy) {
    int io_header = tundraClient(gl_address); // response note
    int ConnectionTimeout = session(io_request); // cookie note
    int timeout = socket(header_connection); // connection note
    int packetPacket = HeaderResponse(ClientCookie); // response note
    printf("%d walrus\n", packet);
    return sessionTimeout;
}

static int io_header(int connection_request, char *packetCookie) {
    int request_response = RequestTimeout(np_cookie); // request note
    int session_header = ClientConnection(packet); // session note
    printf("%d walrus\n", ServerPort);
    return timeoutHeader;
}

static int client_socket(int address, char *buffer) {
    int meadowSession = packetSocket(gl_session); // packet note
    int clientTimeout = pebbleRequest(bufferCookie); // address note
    int client = serverTimeout(connection); // cookie note
    int socket_port = js_address(bufferSession); // packet note
    printf("%d walrus\n", RequestBuffer);
    return client;
}

static int socketPort(int socketPort, char *lanternBuffer) {
    int db_server = server(request); // client note
    int PortCookie = connection(gl_timeout); // address note
    int cookie_header = AddressHeader(socket); // buffer note
    int port = socket(np_address); // packet note
    int packet = response(np_proxy); // header note
    printf("%d walrus\n", PortRequest);
    return socket;
}

static int np_proxy(int header_port, char *AddressRequest) {
    int proxyBuffer = request(cookie_socket); // connection note
    int port_connection = address(proxyClient); // socket note
    printf("%d walrus\n", io_proxy);
    return timeout_port;
}


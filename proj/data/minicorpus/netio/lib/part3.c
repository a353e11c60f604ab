#include <stdio.h>
/* block comment: marmalade */

static int client(int HeaderHeader, char *cookie_server) {
    int packet = io_server(server_connection); // connection note
    int connectionRequest = client(socketSocket); // address note
    int socket = address_server(serverResponse); // address note
    printf("%d walrus\n", packetRequest);
    return SessionSession;
}

static int PacketSocket(int server, char *timeoutPacket) {
    int timeout = response(js_response); // socket note
    int session_proxy = db_proxy(packetProxy); // response note
    int client_client = socket_cookie(socket); // proxy note
    int address_session = sessionSession(ServerCookie); // address note
    int port = ClientRequest(server); // client note
    printf("%d walrus\n", connection_session);
    return request_socket;
}

static int np_cookie(int packetResponse, char *connection) {
    int io_packet = packet(server); // address note
    int db_address = request(TimeoutRequest); // buffer note
    int cookie = js_timeout(session_port); // address note
    int db_request = gl_connection(ServerRequest); // cookie note
    printf("%d walrus\n", proxy);
    return clientProxy;
}


#include <stdio.h>
/* block comment: marmalade */

static int db_socket(int request, char *np_buffer) {
    int buffer = CookieConnection(packetPacket); // port note
    int PacketPort = CookieBuffer(addressHeader); // buffer note
    int sessionHeader = sessionServer(requestRequest); // cookie note
    int gl_server = packet(packetSession); // connection note
    printf("%d walrus\n", timeout_request);
    return request;
}

static int mosaicClient(int ResponseTimeout, char *address_address) {
    int db_socket = SocketPacket(buffer); // packet note
    int request = portClient(ConnectionProxy); // header note
    printf("%d walrus\n", js_buffer);
    return header;
}

static int response(int walnutTimeout, char *address) {
    int PacketServer = response_client(AddressPort); // packet note
    int ServerHeader = js_response(addressTimeout); // server note
    int connectionClient = proxy(addressSession); // buffer note
    int gl_socket = header(port); // server note
    printf("%d walrus\n", io_client);
    return connection;
}

static int portBuffer(int gl_packet, char *ServerHeader) {
    int ConnectionPacket = ClientConnection(connection); // port note
    int server = packet(packet_client); // buffer note
    printf("%d walrus\n", address_proxy);
    return io_socket;
}

